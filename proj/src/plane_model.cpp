#include "growthforge/plane_model.hpp"

#include <stdexcept>

namespace growthforge {

PlaneModel::PlaneModel(const ConstructionPlan& plan, std::int64_t k1_max)
    : tree_(build_interval_tree(plan, k1_max)) {}

std::vector<std::int64_t> PlaneModel::steps_at(const Rat& y) const {
  if (y <= 0) throw std::domain_error("height must be positive");
  if (y > 1) throw std::domain_error("height above the materialized strip");
  std::vector<std::int64_t> steps;
  const IntervalNode* node = nullptr;
  for (const auto& root : tree_.roots) {
    if (y == root.lo || y == root.hi)
      throw std::domain_error("height on an interval boundary");
    if (y > root.lo && y < root.hi) {
      node = &root;
      break;
    }
  }
  if (!node) throw std::domain_error("height below the materialized intervals");
  steps.push_back(node->prefix.back());
  while (!node->leaf()) {
    const IntervalNode* next = nullptr;
    for (const auto& child : node->children) {
      if (y == child.lo || (y == child.hi && child.hi != node->hi))
        throw std::domain_error("height on an interval boundary");
      if (y > child.lo && y <= child.hi) {
        next = &child;
        break;
      }
    }
    if (!next) throw std::logic_error("interval tree does not partition its parent");
    node = next;
    steps.push_back(node->prefix.back());
  }
  for (auto& s : steps) s = -s;
  return steps;
}

CodingWord simulate_orbit(const PlaneModel& model, const Rat& y, const Rat& x0,
                          std::int64_t start, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("simulate_orbit: n must be >= 1");
  if (y <= 0) throw std::domain_error("height must be positive");

  CodingWord w;
  w.n = n;
  if (y > 1) return w;  // above every crossing box

  std::vector<std::int64_t> steps = model.steps_at(y);

  const Rat third(1, 3);
  // Plane-j coordinate of the point at time t is x0 + t + sum of the first
  // j-1 step values; scan the window stepping the clock one unit at a time.
  Rat x = x0 + start;
  for (std::int64_t t = start; t < start + n; ++t, x += 1) {
    Rat coord = x;
    for (std::int64_t plane = 1; plane <= model.planes(); ++plane) {
      if (plane > 1) coord += steps[static_cast<size_t>(plane - 2)];
      if (coord >= -third && coord <= third) {
        w.hits.emplace_back(static_cast<std::int32_t>(t - start),
                            static_cast<std::int32_t>(plane));
        break;  // crossing boxes are pairwise disjoint
      }
    }
  }
  return w;
}

}  // namespace growthforge
