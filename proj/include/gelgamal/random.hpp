#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gelgamal/field.hpp"

namespace gelgamal {

/// Source of randomness injected into every sampling routine.
///
/// Deterministic-test mode replays the same stream for the same seed bytes,
/// which makes protocol transcripts reproducible. Cryptographic mode reads
/// from the operating system CSPRNG and is the only mode suitable for real
/// keys. Instances are single-owner: move them, do not share them.
class RandomSource {
 public:
  enum class Mode { deterministic_test, cryptographic };

  static RandomSource deterministic(std::span<const std::uint8_t> seed);
  static RandomSource deterministic(std::uint64_t seed);
  static RandomSource cryptographic();

  RandomSource(RandomSource&&) noexcept = default;
  RandomSource& operator=(RandomSource&&) noexcept = default;
  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;

  Mode mode() const noexcept { return mode_; }

  std::uint64_t next_u64();

  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform over [0, p-1].
  FieldElement uniform_residue(std::uint8_t p);
  /// Uniform over [1, p-1].
  FieldElement uniform_nonzero(std::uint8_t p);

 private:
  explicit RandomSource(Mode mode) : mode_(mode) {}

  Mode mode_;
  std::mt19937_64 engine_;
};

/// `count` pairwise-distinct values drawn uniformly from [1, p-1]
/// (a uniformly random partial permutation). Throws ImpossibleRequest
/// when count > p-1.
std::vector<FieldElement> sample_distinct_nonzero(RandomSource& rng, std::size_t count,
                                                  std::uint8_t p = kDefaultModulus);

}  // namespace gelgamal
