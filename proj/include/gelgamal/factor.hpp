#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gelgamal {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Prime factorisation of n >= 1, primes ascending. Trial division up to
/// 10^6, then Pollard-Brent rho on the cofactor.
std::vector<PrimePower> factor_u64(std::uint64_t n);

/// p^d - 1 if it fits in 64 bits.
std::optional<std::uint64_t> field_unit_group_order(unsigned p, unsigned d) noexcept;

}  // namespace gelgamal
