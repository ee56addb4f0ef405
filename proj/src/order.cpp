#include "gelgamal/order.hpp"

#include <string>

namespace gelgamal {

namespace {

std::uint64_t unit_group_order_or_throw(unsigned p, unsigned d) {
  auto n = field_unit_group_order(p, d);
  if (!n) {
    throw OutOfRange(std::to_string(p) + "^" + std::to_string(d) +
                     " - 1 exceeds 64 bits; order computation is unsupported");
  }
  return *n;
}

}  // namespace

std::uint64_t element_order(const Matrix& a) {
  const std::uint64_t n = unit_group_order_or_throw(a.modulus(), static_cast<unsigned>(a.dim()));
  const Matrix id = Matrix::identity(a.dim(), a.modulus());
  return order_from_exponent(
      a, n, factor_u64(n), [](const Matrix& m, std::uint64_t e) { return power(m, e); },
      [&](const Matrix& m) { return m == id; });
}

std::uint64_t element_order(const Polynomial& residue, const Polynomial& f) {
  if (f.degree() < 1) throw ContractViolation("element_order: modulus polynomial must have degree >= 1");
  const Polynomial r = residue % f;
  if (r.is_zero()) throw NotInvertible("element_order: zero residue has no multiplicative order");
  const std::uint64_t n = unit_group_order_or_throw(f.modulus(), static_cast<unsigned>(f.degree()));
  const Polynomial one = Polynomial({1}, f.modulus());
  return order_from_exponent(
      r, n, factor_u64(n), [&](const Polynomial& b, std::uint64_t e) { return pow_mod(b, e, f); },
      [&](const Polynomial& b) { return b == one; });
}

}  // namespace gelgamal
