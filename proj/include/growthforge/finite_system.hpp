#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthforge/numeric.hpp"

namespace growthforge {

// Finite metric space with a self-map. Distances are exact rationals,
// internally ranked so the counting loops run on small integers.
class FiniteSystem {
 public:
  FiniteSystem(std::vector<std::vector<Rat>> dist, std::vector<std::int32_t> next);

  // Uniform P-point circle grid with the arc metric and i -> i + rot (mod P).
  static FiniteSystem circle_rotation(std::int32_t points, std::int32_t rot);
  // Uniform grid with the doubling map i -> 2i (mod P).
  static FiniteSystem circle_doubling(std::int32_t points);

  std::int32_t size() const { return p_; }
  std::int32_t next(std::int32_t i) const { return next_[static_cast<size_t>(i)]; }
  std::int32_t iterate(std::int32_t i, std::int64_t k) const;
  Rat dist(std::int32_t i, std::int32_t j) const;
  Rat diameter() const;

  std::int32_t rank(std::int32_t i, std::int32_t j) const {
    return ranks_[static_cast<size_t>(i) * p_ + j];
  }
  // First rank whose value is >= eps (== number of ranks when eps exceeds all).
  std::int32_t rank_threshold(const Rat& eps) const;
  const std::vector<Rat>& rank_values() const { return rank_values_; }

 private:
  FiniteSystem() = default;
  std::int32_t p_ = 0;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> ranks_;   // P x P
  std::vector<Rat> rank_values_;      // ascending, rank_values_[0] == 0
};

enum class CountTag { GreedyLower, GreedyUpper, Exact };
std::string to_string(CountTag t);

struct CountResult {
  std::int64_t count = 0;
  CountTag tag = CountTag::Exact;
};

// max over the first n iterates of the pointwise distance.
Rat dyn_dist(const FiniteSystem& sys, std::int32_t x, std::int32_t y, std::int64_t n);

// Maximal (n, eps)-separated set: exact search for systems of at most 16
// points, deterministic first-fit otherwise (lower bound on the maximum).
CountResult separated_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps);

// Greedy (n, eps)-spanning set (upper bound on the minimum).
CountResult spanning_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps);

// Exact minimum spanning set by subset search; only for small systems.
CountResult exact_spanning_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps);

// Smallest subcover of the n-step refinement of `cover`; exact
// branch-and-bound when the refinement has at most 20 distinct sets.
CountResult cover_count(const FiniteSystem& sys,
                        const std::vector<std::vector<std::int32_t>>& cover, std::int64_t n);

// Number of distinct nonempty sets in the n-step refinement.
std::int64_t refined_cover_size(const FiniteSystem& sys,
                                const std::vector<std::vector<std::int32_t>>& cover,
                                std::int64_t n);

}  // namespace growthforge
