#include "gelgamal/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gelgamal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = mul_mod64(r, b, m);
    b = mul_mod64(b, b, m);
    e >>= 1U;
  }
  return r;
}

// Brent's cycle detection with batched gcds. n must be odd and composite.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod64(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batch overshot; step one at a time from the saved point.
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  std::uint64_t f = pollard_brent(n);
  split(f, out);
  split(n / f, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor_u64(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> found;
  if (n > 1) {
    constexpr std::uint64_t kTrialLimit = 1'000'000;
    for (std::uint64_t q = 2; q <= kTrialLimit && q * q <= n; q += (q == 2 ? 1 : 2)) {
      while (n % q == 0) {
        ++found[q];
        n /= q;
      }
    }
    split(n, found);
  }
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto [prime, e] : found) out.push_back({prime, e});
  return out;
}

std::optional<std::uint64_t> field_unit_group_order(unsigned p, unsigned d) noexcept {
  u128 v = 1;
  for (unsigned i = 0; i < d; ++i) {
    v *= p;
    if (v > (static_cast<u128>(1) << 64U)) return std::nullopt;
  }
  v -= 1;
  if (v >> 64U) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace gelgamal
