#include "growthforge/interval_tree.hpp"

#include <stdexcept>

namespace growthforge {

std::vector<std::int64_t> JumpTuple::hit_times() const {
  std::vector<std::int64_t> t;
  t.reserve(k.size() + 1);
  t.push_back(0);
  for (std::int64_t g : k) t.push_back(t.back() + g);
  return t;
}

std::int64_t JumpTuple::last_hit() const {
  std::int64_t t = 0;
  for (std::int64_t g : k) t += g;
  return t;
}

std::vector<JumpTuple> admissible_tuples(const ConstructionPlan& plan, std::int64_t k1) {
  if (k1 < 1 || k1 > plan.N) throw std::invalid_argument("k1 outside plan range");
  std::vector<JumpTuple> out;
  std::vector<std::int64_t> ks{k1};
  auto rec = [&](auto&& self, std::int64_t i, std::int64_t prefix_sum) -> void {
    if (i == plan.L + 1) {
      out.push_back(JumpTuple{ks});
      return;
    }
    std::int64_t a = plan.factor(i + 1, k1);
    for (std::int64_t j = 1; j <= a; ++j) {
      std::int64_t next = 2 * i * k1 - prefix_sum + j;
      ks.push_back(next);
      self(self, i + 1, prefix_sum + next);
      ks.pop_back();
    }
  };
  rec(rec, 1, k1);
  return out;
}

namespace {

void build_children(IntervalNode& node, const ConstructionPlan& plan, std::int64_t k1,
                    std::int64_t depth, std::int64_t prefix_sum) {
  if (depth == plan.L + 1) return;
  std::int64_t a = plan.factor(depth + 1, k1);
  Rat width = (node.hi - node.lo) / a;
  node.children.reserve(static_cast<size_t>(a));
  // Left-to-right children carry decreasing j: the step value -k_{i+1} then
  // increases with the height, matching an increasing gluing map.
  for (std::int64_t pos = 0; pos < a; ++pos) {
    std::int64_t j = a - pos;
    std::int64_t next = 2 * depth * k1 - prefix_sum + j;
    IntervalNode child;
    child.prefix = node.prefix;
    child.prefix.push_back(next);
    child.lo = node.lo + width * pos;
    child.hi = pos + 1 == a ? node.hi : node.lo + width * (pos + 1);
    build_children(child, plan, k1, depth + 1, prefix_sum + next);
    node.children.push_back(std::move(child));
  }
}

}  // namespace

IntervalTree build_interval_tree(const ConstructionPlan& plan, std::int64_t k1_max) {
  if (k1_max < 1 || k1_max > plan.N)
    throw std::invalid_argument("k1_max outside [1, N]");
  IntervalTree tree;
  tree.L = plan.L;
  tree.k1_max = k1_max;
  tree.roots.reserve(static_cast<size_t>(k1_max));
  for (std::int64_t k1 = 1; k1 <= k1_max; ++k1) {
    IntervalNode root;
    root.prefix = {k1};
    root.lo = Rat(1, k1 + 1);
    root.hi = Rat(1, k1);
    build_children(root, plan, k1, 1, k1);
    tree.roots.push_back(std::move(root));
  }
  return tree;
}

std::int64_t IntervalTree::count_leaves(std::int64_t k1) const {
  std::int64_t count = 0;
  auto rec = [&](auto&& self, const IntervalNode& n) -> void {
    if (n.leaf()) {
      ++count;
      return;
    }
    for (const auto& c : n.children) self(self, c);
  };
  rec(rec, root(k1));
  return count;
}

void IntervalTree::collect_leaves(std::int64_t k1, std::vector<const IntervalNode*>& out) const {
  auto rec = [&](auto&& self, const IntervalNode& n) -> void {
    if (n.leaf()) {
      out.push_back(&n);
      return;
    }
    for (const auto& c : n.children) self(self, c);
  };
  rec(rec, root(k1));
}

}  // namespace growthforge
