#pragma once

#include <cstdint>
#include <vector>

#include "growthforge/compare.hpp"
#include "growthforge/growth.hpp"

namespace growthforge {

// Integer sequences realizing a target class: e(n) = a_2(n)...a_{L+1}(n),
// d(n) = n * sum_{k<=n} e(k), with d tracking the target up to constants.
struct ConstructionPlan {
  std::int64_t L = 3;
  std::int64_t N = 0;
  std::vector<Rat> target_values;          // 1-indexed at [n-1]
  std::vector<BigInt> e;                    // achieved products
  std::vector<std::vector<std::int64_t>> factors;  // factors[n-1] = (a_2..a_{L+1})
  std::vector<BigInt> d;
  std::vector<double> slack_log;            // log(d(n) / a(n))
  Rat b1{0}, b2{0};                         // witnesses over n >= burn-in

  std::int64_t factor(std::int64_t i, std::int64_t n) const;  // a_i(n), i in [2, L+1]
  const BigInt& e_at(std::int64_t n) const { return e[static_cast<size_t>(n - 1)]; }
  const BigInt& d_at(std::int64_t n) const { return d[static_cast<size_t>(n - 1)]; }
  Rat target_at(std::int64_t n) const { return target_values[static_cast<size_t>(n - 1)]; }
};

inline constexpr std::int64_t kBurnIn = 8;

struct PlanConfig {
  Rat slack{64};
  double trend_factor = 2.0;
  CompareConfig compare() const { return {slack, trend_factor}; }
};

// Minimal L >= 3 with target <= [n^L]. Throws when the target sits below
// [n^2] or exceeds every polynomial.
std::int64_t choose_L(const Growth& target, std::int64_t horizon,
                      const PlanConfig& cfg = {});

// Runs the e-recurrence with exact rationals, splitting each e into factors
// <= n and maintaining d from the achieved products.
ConstructionPlan build_sequences(const Growth& target, std::int64_t L, std::int64_t N,
                                 const PlanConfig& cfg = {});

// Deterministic split of e_value into L factors <= n, product in
// [e_value / 2^L, e_value], largest factor first.
std::vector<std::int64_t> factor_split(const BigInt& e_value, std::int64_t n, std::int64_t L);

struct CompositePlan {
  std::vector<ConstructionPlan> stages;
  std::int64_t K = 0;
};

// Independent stage plans for the first K members of an ordered chain.
CompositePlan build_composite(const ChainSup& chain, std::int64_t K, std::int64_t N,
                              const PlanConfig& cfg = {});

}  // namespace growthforge
