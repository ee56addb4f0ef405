#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gelgamal/field.hpp"
#include "gelgamal/natural.hpp"
#include "gelgamal/random.hpp"

namespace gelgamal {

/// Polynomial over Z_p with coefficients stored lowest degree first.
///
/// Always canonical: no zero coefficients above the leading term, so the
/// zero polynomial has no coefficients at all and degree -1.
class Polynomial {
 public:
  explicit Polynomial(std::uint8_t p = kDefaultModulus);
  /// Coefficients lowest degree first; each is reduced mod p, then trimmed.
  Polynomial(std::span<const std::uint8_t> coeffs, std::uint8_t p = kDefaultModulus);
  Polynomial(std::initializer_list<std::uint8_t> coeffs, std::uint8_t p = kDefaultModulus);

  /// c * x^k.
  static Polynomial monomial(std::size_t k, std::uint8_t c = 1, std::uint8_t p = kDefaultModulus);

  std::uint8_t modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of x^i; zero beyond the degree.
  std::uint8_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint8_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const std::uint8_t> coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation.
  std::uint8_t evaluate(std::uint8_t x) const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() noexcept;

  std::vector<std::uint8_t> coeffs_;
  std::uint8_t modulus_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder. Throws ContractViolation for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Scales to leading coefficient one; the zero polynomial stays zero.
Polynomial make_monic(const Polynomial& a);
/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod modulus.
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Deterministic irreducibility test for monic f of degree >= 1:
/// x^(p^d) = x mod f, and gcd(x^(p^(d/q)) - x, f) = 1 for every prime q | d.
bool is_irreducible(const Polynomial& f);

struct IrreducibleDraw {
  Polynomial poly;
  unsigned trials;
};

/// Uniform monic irreducible polynomial of degree d >= 2: sample uniform
/// monic polynomials until one passes is_irreducible. Expected trials ~ d.
IrreducibleDraw draw_irreducible(RandomSource& rng, unsigned d, std::uint8_t p = kDefaultModulus);
Polynomial rand_irreducible(RandomSource& rng, unsigned d, std::uint8_t p = kDefaultModulus);

/// Number of monic irreducible polynomials of degree d over F_p by the
/// Moebius necklace formula (1/d) * sum_{r | d} mu(r) p^(d/r).
Natural count_irreducibles(unsigned d, unsigned p = kDefaultModulus);

/// p^d - 2: monic degree-d polynomials excluding the null and unitary cases.
Natural count_monic_nontrivial(unsigned d, unsigned p = kDefaultModulus);

/// Moebius function of n >= 1.
int mobius(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace gelgamal
