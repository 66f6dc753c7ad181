#pragma once

#include <cstdint>

#include "growthforge/coder.hpp"
#include "growthforge/interval_tree.hpp"

namespace growthforge {

// Exact-rational model of the glued upper half-planes: step functions
// phi_i read off the interval tree, unit translation, crossing boxes
// [-1/3, 1/3] x [0, 1] in each plane.
class PlaneModel {
 public:
  PlaneModel(const ConstructionPlan& plan, std::int64_t k1_max);

  std::int64_t planes() const { return tree_.L + 2; }
  const IntervalTree& tree() const { return tree_; }

  // Step values (-k_1, ..., -k_{L+1}) for a height strictly inside its leaf.
  // Throws on interval boundaries, non-positive heights and heights below the
  // materialized range.
  std::vector<std::int64_t> steps_at(const Rat& y) const;

 private:
  IntervalTree tree_;
};

// Codes the orbit of the point that sits at (x0, y) in plane-1 coordinates at
// time 0, over the window [start, start + n). Heights above 1 never meet a
// crossing box; boundary heights are rejected.
CodingWord simulate_orbit(const PlaneModel& model, const Rat& y, const Rat& x0,
                          std::int64_t start, std::int64_t n);

}  // namespace growthforge
