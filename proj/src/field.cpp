#include "gelgamal/field.hpp"

#include <ostream>
#include <string>

#include "gelgamal/errors.hpp"

namespace gelgamal {

bool is_byte_prime(unsigned p) noexcept {
  if (p < 2 || p > 255) return false;
  for (unsigned q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_prime_modulus(unsigned p) {
  if (!is_byte_prime(p)) {
    throw ContractViolation("modulus " + std::to_string(p) + " is not a prime in [2, 251]");
  }
}

namespace {

void require_same_modulus(FieldElement a, FieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw ContractViolation("field elements from Z_" + std::to_string(a.modulus()) + " and Z_" +
                            std::to_string(b.modulus()) + " cannot be combined");
  }
}

}  // namespace

FieldElement::FieldElement(std::int64_t value, std::uint8_t p) : modulus_(p) {
  require_prime_modulus(p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint8_t>(r);
}

FieldElement FieldElement::operator-() const noexcept {
  return from_canonical(sub_mod(0, value_, modulus_), modulus_);
}

FieldElement& FieldElement::operator+=(FieldElement rhs) {
  require_same_modulus(*this, rhs);
  value_ = add_mod(value_, rhs.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator-=(FieldElement rhs) {
  require_same_modulus(*this, rhs);
  value_ = sub_mod(value_, rhs.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator*=(FieldElement rhs) {
  require_same_modulus(*this, rhs);
  value_ = mul_mod(value_, rhs.value_, modulus_);
  return *this;
}

std::uint8_t inv_mod(std::uint8_t a, std::uint8_t p) {
  if (a % p == 0) throw NotInvertible("zero has no inverse modulo " + std::to_string(p));
  // Extended Euclid on (p, a); the coefficient of a ends up as the inverse.
  int r0 = p, r1 = a % p;
  int t0 = 0, t1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p;
  return static_cast<std::uint8_t>(t0);
}

FieldElement inverse(FieldElement a) {
  return FieldElement::from_canonical(inv_mod(a.value(), a.modulus()), a.modulus());
}

FieldElement pow(FieldElement a, std::uint64_t e) noexcept {
  const std::uint8_t p = a.modulus();
  std::uint8_t result = 1 % p;
  std::uint8_t base = a.value();
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return FieldElement::from_canonical(result, p);
}

std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << unsigned{e.value()}; }

}  // namespace gelgamal
