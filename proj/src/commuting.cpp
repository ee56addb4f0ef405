#include "gelgamal/commuting.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "gelgamal/errors.hpp"

namespace gelgamal {

DiagonalSpec::DiagonalSpec(std::vector<FieldElement> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.size() < Matrix::kMinDim || lambdas_.size() > Matrix::kMaxDim) {
    throw ContractViolation("diagonal spec needs between 2 and 16 eigenvalues");
  }
  std::vector<std::uint8_t> seen;
  for (auto l : lambdas_) {
    if (l.modulus() != lambdas_.front().modulus()) throw ContractViolation("diagonal spec mixes moduli");
    if (l.is_zero()) throw ContractViolation("diagonal spec eigenvalues must be nonzero");
    if (std::find(seen.begin(), seen.end(), l.value()) != seen.end()) {
      throw ContractViolation("diagonal spec eigenvalues must be pairwise distinct");
    }
    seen.push_back(l.value());
  }
}

DiagonalSpec DiagonalSpec::random(RandomSource& rng, std::size_t dim, std::uint8_t p) {
  return DiagonalSpec(sample_distinct_nonzero(rng, dim, p));
}

std::vector<FieldElement> DiagonalSpec::powered(std::uint64_t k) const {
  std::vector<FieldElement> out;
  out.reserve(lambdas_.size());
  for (auto l : lambdas_) out.push_back(pow(l, k));
  return out;
}

CommutingContext::CommutingContext(Matrix basis) : basis_(std::move(basis)), basis_inv_(inverse(basis_)) {
  assert(basis_ * basis_inv_ == Matrix::identity(basis_.dim(), basis_.modulus()));
}

Matrix conjugate_values(const CommutingContext& ctx, std::span<const FieldElement> values) {
  if (values.size() != ctx.dim()) throw ContractViolation("diagonal size differs from basis dimension");
  const std::uint8_t p = ctx.modulus();
  // P * diag(v) scales column j of P by v_j.
  Matrix scaled = ctx.basis();
  for (std::size_t j = 0; j < ctx.dim(); ++j) {
    if (values[j].modulus() != p) throw ContractViolation("diagonal modulus differs from basis modulus");
    const std::uint8_t v = values[j].value();
    for (std::size_t i = 0; i < ctx.dim(); ++i) scaled.raw(i, j) = mul_mod(scaled.raw(i, j), v, p);
  }
  return scaled * ctx.basis_inverse();
}

Matrix conjugate_diagonal(const CommutingContext& ctx, const DiagonalSpec& spec) {
  return conjugate_values(ctx, spec.lambdas());
}

Matrix conjugate_diagonal_power(const CommutingContext& ctx, const DiagonalSpec& spec, std::uint64_t k) {
  const auto values = spec.powered(k);
  return conjugate_values(ctx, values);
}

Matrix sample_subgroup_element(const CommutingContext& ctx, RandomSource& rng) {
  return conjugate_diagonal(ctx, DiagonalSpec::random(rng, ctx.dim(), ctx.modulus()));
}

bool commutes(const Matrix& a, const Matrix& b) { return a * b == b * a; }

}  // namespace gelgamal
