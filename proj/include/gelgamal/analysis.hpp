#pragma once

#include <cstdint>
#include <optional>

#include "gelgamal/commuting.hpp"
#include "gelgamal/matrix.hpp"
#include "gelgamal/natural.hpp"
#include "gelgamal/random.hpp"

namespace gelgamal::analysis {

struct Cardinality {
  Natural value;
  double log10;
  double log2;
};

Cardinality make_cardinality(Natural value);

/// |GL(d, F_p)| = prod_{i=0}^{d-1} (p^d - p^i).
Cardinality order_gl(unsigned d, unsigned p = kDefaultModulus);

struct AmbientCounts {
  Cardinality all;        // p^(d^2)
  Cardinality nilpotent;  // p^(d^2 - d)
};

AmbientCounts count_ambient(unsigned d, unsigned p = kDefaultModulus);

/// Brute-force search space of the hidden commutative subgroup, two ways:
/// ordered d-tuples of distinct eigenvalues avoiding 0 and 1,
/// (p-2)(p-3)...(p-1-d), which is the customary figure, and ordered d-tuples
/// of distinct nonzero eigenvalues, (p-1)(p-2)...(p-d). The two differ by
/// the factor (p-1)/(p-1-d).
struct SubgroupOrders {
  Cardinality distinct_excluding_one;
  Cardinality distinct_nonzero;
};

SubgroupOrders order_commutative_subgroup(unsigned d, unsigned p = kDefaultModulus);

struct SingularEstimate {
  double closed_form;  // 1 - prod_{i=1}^{d} (1 - p^-i)
  double monte_carlo;
  std::uint64_t trials;
  std::uint64_t singular;
};

double singular_probability_closed_form(unsigned d, unsigned p = kDefaultModulus);
SingularEstimate singular_probability(unsigned d, unsigned p, std::uint64_t trials, RandomSource& rng);

/// y = z^m x z^n with z in the subgroup {P D P^-1}. For the blind variant the
/// exponents are absent.
struct GsdpInstance {
  Matrix x;
  Matrix y;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n;
  CommutingContext subgroup;
};

struct GeneratedInstance {
  GsdpInstance instance;
  Matrix witness;
  std::uint64_t m;
  std::uint64_t n;
};

/// Uniform x, a uniform subgroup witness z, and m, n uniform in [1, max_exp].
GeneratedInstance generate_gsdp_instance(RandomSource& rng, std::size_t d, std::uint8_t p, std::uint64_t max_exp);

/// z lies in the subgroup (invertible, and commutes with each generator
/// P E_ii P^-1) and satisfies z^m x z^n = y.
bool gsdp_verify(const GsdpInstance& inst, const Matrix& z, std::uint64_t m, std::uint64_t n);
/// Uses the instance's own exponents; throws ContractViolation if absent.
bool gsdp_verify(const GsdpInstance& inst, const Matrix& z);

struct BgsdpSolution {
  Matrix z;
  std::uint64_t m;
  std::uint64_t n;
};

struct BgsdpSearch {
  std::optional<BgsdpSolution> solution;
  std::uint64_t candidates_checked;
};

/// Toy-scale search with x known and (m, n) unknown: every distinct-nonzero
/// eigenvalue tuple in lexicographic order, then m, then n in [1, max_exp].
/// Returns the first verifying triple. Refuses (ContractViolation) unless
/// d = 2, p <= 7 and max_exp <= 64.
BgsdpSearch bgsdp_bruteforce(const GsdpInstance& inst, std::uint64_t max_exp);

}  // namespace gelgamal::analysis
