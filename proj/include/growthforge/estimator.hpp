#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthforge/compare.hpp"
#include "growthforge/finite_system.hpp"
#include "growthforge/growth.hpp"

namespace growthforge {

enum class SampleMethod { Spanning, Separated };
std::string to_string(SampleMethod m);

// Per-epsilon count sequences g(n) or s(n) for n = 1..n_max; monotone in n
// for fixed eps and in eps for fixed n (asserted at construction).
struct GrowthSample {
  SampleMethod method = SampleMethod::Spanning;
  std::vector<Rat> epsilons;                // strictly decreasing ladder
  std::vector<std::vector<Rat>> counts;     // counts[rung][n-1]
  std::vector<CountTag> tags;               // one per rung
};

// Geometric ladder diameter / 2^j, j = 1..rungs.
std::vector<Rat> epsilon_ladder(const FiniteSystem& sys, int rungs = 6);

GrowthSample collect_samples(const FiniteSystem& sys, SampleMethod method,
                             const std::vector<Rat>& epsilons, std::int64_t n_max);

// Least-squares fit of one count sequence to the symbolic family: an
// exponential rate when the exponential model clearly fits better, a
// polynomial exponent otherwise, the constant class for constant data.
GrowthExpr fit_growth_expr(const std::vector<Rat>& counts);

struct EstimateResult {
  std::vector<GrowthExpr> per_rung;
  GrowthExpr cls;          // sup of the rung classes
  Projection h;            // exponential-scale projection of cls
  Projection h_pol;        // polynomial-scale projection of cls
};

// Classes per rung, their sup, and the two projections. Requires at least
// three rungs; rejects samples that break the eps-monotonicity invariant.
EstimateResult estimate_class(const GrowthSample& sample);

}  // namespace growthforge
