#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gelgamal/matrix.hpp"
#include "gelgamal/random.hpp"

namespace gelgamal {

/// Eigenvalues of a subgroup element: d pairwise-distinct nonzero residues.
class DiagonalSpec {
 public:
  /// Throws ContractViolation if any entry is zero, entries repeat, moduli
  /// differ, or fewer than two entries are given.
  explicit DiagonalSpec(std::vector<FieldElement> lambdas);

  static DiagonalSpec random(RandomSource& rng, std::size_t dim, std::uint8_t p = kDefaultModulus);

  std::size_t dim() const noexcept { return lambdas_.size(); }
  std::uint8_t modulus() const noexcept { return lambdas_.front().modulus(); }
  std::span<const FieldElement> lambdas() const noexcept { return lambdas_; }

  /// Entrywise k-th power. Distinctness need not survive, so this returns
  /// plain values rather than another DiagonalSpec.
  std::vector<FieldElement> powered(std::uint64_t k) const;

  friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;

 private:
  std::vector<FieldElement> lambdas_;
};

/// Shared eigenbasis P with its cached inverse. Every P * D * P^-1 built
/// from one context commutes with every other. Immutable; a new basis means
/// a new context.
class CommutingContext {
 public:
  /// Throws SingularMatrix if the basis is not invertible.
  explicit CommutingContext(Matrix basis);

  const Matrix& basis() const noexcept { return basis_; }
  const Matrix& basis_inverse() const noexcept { return basis_inv_; }
  std::size_t dim() const noexcept { return basis_.dim(); }
  std::uint8_t modulus() const noexcept { return basis_.modulus(); }

 private:
  Matrix basis_;
  Matrix basis_inv_;
};

/// P * diag(values) * P^-1 for arbitrary diagonal values.
Matrix conjugate_values(const CommutingContext& ctx, std::span<const FieldElement> values);

/// P * diag(D) * P^-1.
Matrix conjugate_diagonal(const CommutingContext& ctx, const DiagonalSpec& spec);

/// (P D P^-1)^k computed as P D^k P^-1.
Matrix conjugate_diagonal_power(const CommutingContext& ctx, const DiagonalSpec& spec, std::uint64_t k);

/// Fresh element of the hidden commutative subgroup: P * diag(distinct nonzero) * P^-1.
Matrix sample_subgroup_element(const CommutingContext& ctx, RandomSource& rng);

/// a * b == b * a.
bool commutes(const Matrix& a, const Matrix& b);

}  // namespace gelgamal
