#pragma once

#include <cstdint>
#include <vector>

#include "growthforge/numeric.hpp"
#include "growthforge/plan.hpp"

namespace growthforge {

// Crossing-time tuple (k_1, ..., k_{L+1}); hit times are the prefix sums
// T_1 = 0, T_{i+1} = T_i + k_i.
struct JumpTuple {
  std::vector<std::int64_t> k;

  std::vector<std::int64_t> hit_times() const;
  std::int64_t last_hit() const;
};

// All admissible tuples for a fixed k1: k_{i+1} = 2i k1 - S_i + j with
// j in [1, a_{i+1}(k1)], so every prefix sum lands in (2i k1, (2i+1) k1].
std::vector<JumpTuple> admissible_tuples(const ConstructionPlan& plan, std::int64_t k1);

// Nested half-open rational intervals inside (0, 1]; the depth-(L+1) leaves
// under (1/(k1+1), 1/k1] are in bijection with the admissible tuples.
struct IntervalNode {
  std::vector<std::int64_t> prefix;  // (k_1, ..., k_i)
  Rat lo, hi;                        // interval (lo, hi]
  std::vector<IntervalNode> children;

  bool leaf() const { return children.empty(); }
};

struct IntervalTree {
  std::int64_t L = 0;
  std::int64_t k1_max = 0;
  std::vector<IntervalNode> roots;  // index k1-1

  const IntervalNode& root(std::int64_t k1) const { return roots[static_cast<size_t>(k1 - 1)]; }
  std::int64_t count_leaves(std::int64_t k1) const;
  void collect_leaves(std::int64_t k1, std::vector<const IntervalNode*>& out) const;
};

IntervalTree build_interval_tree(const ConstructionPlan& plan, std::int64_t k1_max);

}  // namespace growthforge
