#include "gelgamal/analysis.hpp"

#include <string>
#include <utility>
#include <vector>

#include "gelgamal/errors.hpp"

namespace gelgamal::analysis {

namespace {

void require_params(unsigned d, unsigned p) {
  if (d == 0) throw ContractViolation("dimension must be positive");
  if (!is_byte_prime(p)) throw ContractViolation("modulus " + std::to_string(p) + " is not a byte-sized prime");
}

// Builds the subgroup generators P E_ii P^-1.
std::vector<Matrix> idempotent_generators(const CommutingContext& ctx) {
  std::vector<Matrix> gens;
  const std::uint8_t p = ctx.modulus();
  for (std::size_t i = 0; i < ctx.dim(); ++i) {
    std::vector<FieldElement> unit(ctx.dim(), FieldElement(0, p));
    unit[i] = FieldElement(1, p);
    gens.push_back(conjugate_values(ctx, unit));
  }
  return gens;
}

bool in_subgroup(const CommutingContext& ctx, const Matrix& z) {
  if (z.dim() != ctx.dim() || z.modulus() != ctx.modulus() || !is_invertible(z)) return false;
  for (const Matrix& g : idempotent_generators(ctx)) {
    if (!commutes(z, g)) return false;
  }
  return true;
}

}  // namespace

Cardinality make_cardinality(Natural value) {
  const double l10 = log10_of(value);
  const double l2 = log2_of(value);
  return {std::move(value), l10, l2};
}

Cardinality order_gl(unsigned d, unsigned p) {
  require_params(d, p);
  const Natural pd = ipow(Natural(p), d);
  Natural product = 1;
  for (unsigned i = 0; i < d; ++i) product *= pd - ipow(Natural(p), i);
  return make_cardinality(std::move(product));
}

AmbientCounts count_ambient(unsigned d, unsigned p) {
  require_params(d, p);
  return {make_cardinality(ipow(Natural(p), d * d)), make_cardinality(ipow(Natural(p), d * d - d))};
}

SubgroupOrders order_commutative_subgroup(unsigned d, unsigned p) {
  require_params(d, p);
  if (d + 2 > p) throw ContractViolation("need at least d + 2 residues for both subgroup conventions");
  Natural tuples = 1;
  Natural distinct = 1;
  for (unsigned i = 0; i < d; ++i) {
    tuples *= p - 2 - i;
    distinct *= p - 1 - i;
  }
  return {make_cardinality(std::move(tuples)), make_cardinality(std::move(distinct))};
}

double singular_probability_closed_form(unsigned d, unsigned p) {
  require_params(d, p);
  double invertible = 1.0;
  double pi = 1.0;
  for (unsigned i = 1; i <= d; ++i) {
    pi /= p;
    invertible *= 1.0 - pi;
  }
  return 1.0 - invertible;
}

SingularEstimate singular_probability(unsigned d, unsigned p, std::uint64_t trials, RandomSource& rng) {
  if (trials == 0) throw ContractViolation("singular_probability: trials must be at least 1");
  const double closed = singular_probability_closed_form(d, p);
  std::uint64_t singular = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (!is_invertible(random_matrix(rng, d, static_cast<std::uint8_t>(p)))) ++singular;
  }
  return {closed, static_cast<double>(singular) / static_cast<double>(trials), trials, singular};
}

GeneratedInstance generate_gsdp_instance(RandomSource& rng, std::size_t d, std::uint8_t p, std::uint64_t max_exp) {
  if (max_exp == 0) throw ContractViolation("max_exp must be at least 1");
  CommutingContext ctx(random_invertible(rng, d, p));
  Matrix x = random_invertible(rng, d, p);
  Matrix z = sample_subgroup_element(ctx, rng);
  const std::uint64_t m = 1 + rng.uniform_below(max_exp);
  const std::uint64_t n = 1 + rng.uniform_below(max_exp);
  Matrix y = power(z, m) * x * power(z, n);
  return {GsdpInstance{std::move(x), std::move(y), m, n, std::move(ctx)}, std::move(z), m, n};
}

bool gsdp_verify(const GsdpInstance& inst, const Matrix& z, std::uint64_t m, std::uint64_t n) {
  if (!in_subgroup(inst.subgroup, z)) return false;
  return power(z, m) * inst.x * power(z, n) == inst.y;
}

bool gsdp_verify(const GsdpInstance& inst, const Matrix& z) {
  if (!inst.m || !inst.n) throw ContractViolation("gsdp_verify: instance carries no exponents");
  return gsdp_verify(inst, z, *inst.m, *inst.n);
}

BgsdpSearch bgsdp_bruteforce(const GsdpInstance& inst, std::uint64_t max_exp) {
  const std::size_t d = inst.subgroup.dim();
  const std::uint8_t p = inst.subgroup.modulus();
  if (d != 2 || p > 7 || max_exp == 0 || max_exp > 64) {
    throw ContractViolation("bgsdp_bruteforce is limited to d = 2, p <= 7, 1 <= max_exp <= 64");
  }

  BgsdpSearch result{std::nullopt, 0};
  for (std::uint8_t a = 1; a < p; ++a) {
    for (std::uint8_t b = 1; b < p; ++b) {
      if (a == b) continue;
      const DiagonalSpec spec({FieldElement(a, p), FieldElement(b, p)});
      const Matrix z = conjugate_diagonal(inst.subgroup, spec);
      for (std::uint64_t m = 1; m <= max_exp; ++m) {
        const Matrix left = conjugate_diagonal_power(inst.subgroup, spec, m) * inst.x;
        for (std::uint64_t n = 1; n <= max_exp; ++n) {
          ++result.candidates_checked;
          if (left * conjugate_diagonal_power(inst.subgroup, spec, n) == inst.y) {
            result.solution = BgsdpSolution{z, m, n};
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace gelgamal::analysis
