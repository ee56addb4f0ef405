#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace gelgamal {

/// The protocol field. 251 is the largest prime that fits in a byte.
inline constexpr std::uint8_t kDefaultModulus = 251;

/// True for primes that fit in a byte.
bool is_byte_prime(unsigned p) noexcept;

/// Throws ContractViolation unless p is a prime in [2, 251].
void require_prime_modulus(unsigned p);

/// A residue in Z_p, stored as one byte together with its modulus.
///
/// The value is always the canonical representative in [0, p-1]. Binary
/// operations require both operands to share a modulus and throw
/// ContractViolation otherwise.
class FieldElement {
 public:
  /// Zero in the default field.
  constexpr FieldElement() noexcept = default;

  /// Reduces `value` into [0, p-1]. Negative values wrap.
  FieldElement(std::int64_t value, std::uint8_t p = kDefaultModulus);

  /// Builds from a value already known to be canonical. No checks.
  static constexpr FieldElement from_canonical(std::uint8_t value, std::uint8_t p) noexcept {
    FieldElement e;
    e.value_ = value;
    e.modulus_ = p;
    return e;
  }

  constexpr std::uint8_t value() const noexcept { return value_; }
  constexpr std::uint8_t modulus() const noexcept { return modulus_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const noexcept;
  FieldElement& operator+=(FieldElement rhs);
  FieldElement& operator-=(FieldElement rhs);
  FieldElement& operator*=(FieldElement rhs);

  friend FieldElement operator+(FieldElement a, FieldElement b) { return a += b; }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return a *= b; }

  friend constexpr bool operator==(FieldElement, FieldElement) noexcept = default;

 private:
  std::uint8_t value_ = 0;
  std::uint8_t modulus_ = kDefaultModulus;
};

/// Multiplicative inverse by the extended Euclidean algorithm.
/// Throws NotInvertible for zero.
FieldElement inverse(FieldElement a);

/// a^e by square-and-multiply; 0^0 = 1.
FieldElement pow(FieldElement a, std::uint64_t e) noexcept;

/// Raw-byte helpers for the hot loops in linalg and polyfield.
inline constexpr std::uint8_t add_mod(std::uint8_t a, std::uint8_t b, std::uint8_t p) noexcept {
  unsigned s = unsigned{a} + b;
  return static_cast<std::uint8_t>(s >= p ? s - p : s);
}
inline constexpr std::uint8_t sub_mod(std::uint8_t a, std::uint8_t b, std::uint8_t p) noexcept {
  return static_cast<std::uint8_t>(a >= b ? a - b : unsigned{a} + p - b);
}
inline constexpr std::uint8_t mul_mod(std::uint8_t a, std::uint8_t b, std::uint8_t p) noexcept {
  return static_cast<std::uint8_t>((unsigned{a} * b) % p);
}
std::uint8_t inv_mod(std::uint8_t a, std::uint8_t p);

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace gelgamal
