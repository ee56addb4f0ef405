#include "gelgamal/polynomial.hpp"

#include <ostream>
#include <string>

#include "gelgamal/errors.hpp"
#include "gelgamal/factor.hpp"

namespace gelgamal {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) {
    throw ContractViolation("polynomials over Z_" + std::to_string(a.modulus()) + " and Z_" +
                            std::to_string(b.modulus()) + " cannot be combined");
  }
}

Polynomial from_vector(std::vector<std::uint8_t> c, std::uint8_t p) {
  return Polynomial(std::span<const std::uint8_t>(c), p);
}

}  // namespace

Polynomial::Polynomial(std::uint8_t p) : modulus_(p) { require_prime_modulus(p); }

Polynomial::Polynomial(std::span<const std::uint8_t> coeffs, std::uint8_t p)
    : coeffs_(coeffs.begin(), coeffs.end()), modulus_(p) {
  require_prime_modulus(p);
  for (auto& c : coeffs_) c = static_cast<std::uint8_t>(c % p);
  trim();
}

Polynomial::Polynomial(std::initializer_list<std::uint8_t> coeffs, std::uint8_t p)
    : Polynomial(std::span<const std::uint8_t>(coeffs.begin(), coeffs.size()), p) {}

Polynomial Polynomial::monomial(std::size_t k, std::uint8_t c, std::uint8_t p) {
  std::vector<std::uint8_t> v(k + 1, 0);
  v[k] = c;
  return from_vector(std::move(v), p);
}

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint8_t Polynomial::evaluate(std::uint8_t x) const noexcept {
  std::uint8_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = add_mod(mul_mod(acc, x, modulus_), *it, modulus_);
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const std::uint8_t p = a.modulus();
  std::vector<std::uint8_t> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), p);
  return from_vector(std::move(c), p);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const std::uint8_t p = a.modulus();
  std::vector<std::uint8_t> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return from_vector(std::move(c), p);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const std::uint8_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return Polynomial(p);
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  std::vector<std::uint32_t> acc(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint32_t{ac[i]} * bc[j]) % p;
    }
  }
  std::vector<std::uint8_t> c(acc.begin(), acc.end());
  return from_vector(std::move(c), p);
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw ContractViolation("polynomial division by zero");
  const std::uint8_t p = a.modulus();
  if (a.degree() < b.degree()) return {Polynomial(p), a};

  std::vector<std::uint8_t> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const std::uint8_t lead_inv = inv_mod(b.leading(), p);
  std::vector<std::uint8_t> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::uint8_t q = mul_mod(rem[k], lead_inv, p);
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = sub_mod(rem[k - db + j], mul_mod(q, bc[j], p), p);
    }
  }
  rem.resize(db);
  return {from_vector(std::move(quot), p), from_vector(std::move(rem), p)};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial make_monic(const Polynomial& a) {
  if (a.is_zero() || a.is_monic()) return a;
  const std::uint8_t p = a.modulus();
  const std::uint8_t s = inv_mod(a.leading(), p);
  std::vector<std::uint8_t> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = mul_mod(x, s, p);
  return from_vector(std::move(c), p);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial({1}, base.modulus()) % modulus;
  Polynomial b = base % modulus;
  while (e != 0) {
    if (e & 1U) result = (result * b) % modulus;
    e >>= 1U;
    if (e != 0) b = (b * b) % modulus;
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw ContractViolation("is_irreducible: expects a monic polynomial of degree >= 1");
  }
  const auto d = static_cast<unsigned>(f.degree());
  if (d == 1) return true;
  const std::uint8_t p = f.modulus();
  const Polynomial x = Polynomial::monomial(1, 1, p);

  // frobenius[k] = x^(p^k) mod f, built by repeated p-th powers.
  std::vector<Polynomial> frobenius;
  frobenius.reserve(d + 1);
  frobenius.push_back(x % f);
  for (unsigned k = 1; k <= d; ++k) frobenius.push_back(pow_mod(frobenius.back(), p, f));

  if (frobenius[d] != x % f) return false;
  for (const auto& [q, e] : factor_u64(d)) {
    (void)e;
    const Polynomial g = gcd(frobenius[d / q] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

IrreducibleDraw draw_irreducible(RandomSource& rng, unsigned d, std::uint8_t p) {
  if (d < 2) throw ContractViolation("draw_irreducible: degree must be at least 2");
  require_prime_modulus(p);
  std::vector<std::uint8_t> c(d + 1);
  for (unsigned trials = 1;; ++trials) {
    for (unsigned i = 0; i < d; ++i) c[i] = rng.uniform_residue(p).value();
    c[d] = 1;
    Polynomial f(std::span<const std::uint8_t>(c), p);
    if (is_irreducible(f)) return {std::move(f), trials};
  }
}

Polynomial rand_irreducible(RandomSource& rng, unsigned d, std::uint8_t p) {
  return draw_irreducible(rng, d, p).poly;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw ContractViolation("mobius: n must be positive");
  int sign = 1;
  for (const auto& [q, e] : factor_u64(n)) {
    (void)q;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Natural count_irreducibles(unsigned d, unsigned p) {
  if (d == 0) throw ContractViolation("count_irreducibles: degree must be positive");
  Natural sum = 0;
  for (unsigned r = 1; r <= d; ++r) {
    if (d % r != 0) continue;
    const int mu = mobius(r);
    if (mu == 0) continue;
    const Natural term = ipow(Natural(p), d / r);
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return sum / d;
}

Natural count_monic_nontrivial(unsigned d, unsigned p) {
  if (d == 0) throw ContractViolation("count_monic_nontrivial: degree must be positive");
  return ipow(Natural(p), d) - 2;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const unsigned c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os;
}

}  // namespace gelgamal
