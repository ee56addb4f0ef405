#include "gelgamal/random.hpp"

#include <sodium.h>

#include <numeric>
#include <string>

#include "gelgamal/errors.hpp"

namespace gelgamal {

RandomSource RandomSource::deterministic(std::span<const std::uint8_t> seed) {
  // Pack bytes into 32-bit words; the length goes first so that seeds
  // differing only in trailing zero bytes give different streams.
  std::vector<std::uint32_t> words;
  words.reserve(seed.size() / 4 + 2);
  words.push_back(static_cast<std::uint32_t>(seed.size()));
  std::uint32_t acc = 0;
  std::size_t filled = 0;
  for (std::uint8_t b : seed) {
    acc = (acc << 8U) | b;
    if (++filled == 4) {
      words.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled != 0) words.push_back(acc);

  std::seed_seq seq(words.begin(), words.end());
  RandomSource rng(Mode::deterministic_test);
  rng.engine_.seed(seq);
  return rng;
}

RandomSource RandomSource::deterministic(std::uint64_t seed) {
  std::uint8_t bytes[8];
  for (int i = 7; i >= 0; --i) {
    bytes[i] = static_cast<std::uint8_t>(seed & 0xFFU);
    seed >>= 8U;
  }
  return deterministic(std::span<const std::uint8_t>(bytes));
}

RandomSource RandomSource::cryptographic() {
  if (sodium_init() < 0) throw Error("libsodium failed to initialise");
  return RandomSource(Mode::cryptographic);
}

std::uint64_t RandomSource::next_u64() {
  if (mode_ == Mode::cryptographic) {
    std::uint64_t v;
    randombytes_buf(&v, sizeof v);
    return v;
  }
  return engine_();
}

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("uniform_below: bound must be nonzero");
  // Accept only draws below the largest multiple of bound.
  const std::uint64_t limit = -bound % bound;  // == 2^64 mod bound
  for (;;) {
    std::uint64_t v = next_u64();
    if (v >= limit) return v % bound;
  }
}

FieldElement RandomSource::uniform_residue(std::uint8_t p) {
  return FieldElement::from_canonical(static_cast<std::uint8_t>(uniform_below(p)), p);
}

FieldElement RandomSource::uniform_nonzero(std::uint8_t p) {
  return FieldElement::from_canonical(static_cast<std::uint8_t>(1 + uniform_below(p - 1U)), p);
}

std::vector<FieldElement> sample_distinct_nonzero(RandomSource& rng, std::size_t count,
                                                  std::uint8_t p) {
  require_prime_modulus(p);
  const std::size_t available = p - 1U;
  if (count > available) {
    throw ImpossibleRequest("cannot draw " + std::to_string(count) +
                            " distinct nonzero residues modulo " + std::to_string(p));
  }
  std::vector<std::uint8_t> pool(available);
  std::iota(pool.begin(), pool.end(), std::uint8_t{1});
  std::vector<FieldElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(available - i));
    std::swap(pool[i], pool[j]);
    out.push_back(FieldElement::from_canonical(pool[i], p));
  }
  return out;
}

}  // namespace gelgamal
