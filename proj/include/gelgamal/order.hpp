#pragma once

#include <cstdint>
#include <vector>

#include "gelgamal/errors.hpp"
#include "gelgamal/factor.hpp"
#include "gelgamal/matrix.hpp"
#include "gelgamal/polynomial.hpp"

namespace gelgamal {

/// Multiplicative order of an element of a group with exponent
/// `group_exponent`, given the factorisation of that exponent.
///
/// Starts from t = group_exponent and, for each prime q, divides q out of t
/// for as long as x^(t/q) is still the identity. Throws NotInGroup if
/// x^group_exponent is not the identity.
template <class Element, class PowFn, class IsIdentityFn>
std::uint64_t order_from_exponent(const Element& x, std::uint64_t group_exponent,
                                  const std::vector<PrimePower>& factors, PowFn pow_fn,
                                  IsIdentityFn is_identity) {
  if (!is_identity(pow_fn(x, group_exponent))) {
    throw NotInGroup("element order does not divide the group exponent");
  }
  std::uint64_t t = group_exponent;
  for (const auto& [q, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (!is_identity(pow_fn(x, t / q))) break;
      t /= q;
    }
  }
  return t;
}

/// Order of an invertible d x d matrix whose order divides p^d - 1, e.g. a
/// companion matrix of an irreducible polynomial. Throws OutOfRange when
/// p^d - 1 does not fit 64 bits, NotInGroup when the order does not divide it.
std::uint64_t element_order(const Matrix& a);

/// Order of the residue class of `residue` in (F_p[x]/(f))^*, f irreducible.
std::uint64_t element_order(const Polynomial& residue, const Polynomial& f);

}  // namespace gelgamal
