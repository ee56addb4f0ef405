#include "gelgamal/natural.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gelgamal {

Natural ipow(const Natural& base, unsigned e) { return boost::multiprecision::pow(base, e); }

double log10_of(const Natural& n) {
  using Float = boost::multiprecision::cpp_bin_float_100;
  return static_cast<double>(boost::multiprecision::log10(Float(n)));
}

double log2_of(const Natural& n) {
  using Float = boost::multiprecision::cpp_bin_float_100;
  return static_cast<double>(boost::multiprecision::log2(Float(n)));
}

}  // namespace gelgamal
