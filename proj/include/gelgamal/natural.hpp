#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gelgamal {

/// Arbitrary-precision natural, used only for cardinalities in analysis code.
using Natural = boost::multiprecision::cpp_int;

Natural ipow(const Natural& base, unsigned e);
double log10_of(const Natural& n);
double log2_of(const Natural& n);

}  // namespace gelgamal
