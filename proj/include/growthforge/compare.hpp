#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthforge/growth.hpp"

namespace growthforge {

enum class Relation { Equivalent, StrictlyLess, StrictlyGreater, NoVerdict };
enum class VerdictMode { Symbolic, Empirical };

std::string to_string(Relation r);
std::string to_string(VerdictMode m);

struct GrowthClassVerdict {
  Relation relation = Relation::NoVerdict;
  Rat c1{0};
  Rat c2{0};
  std::int64_t horizon = 0;
  VerdictMode mode = VerdictMode::Empirical;
};

struct CompareConfig {
  Rat slack{64};
  double trend_factor = 2.0;  // bound on second-half / first-half geometric means
};

// Decides a <= b / a ~ b on [horizon/2, horizon]; empirical witnesses cover
// all of [1, horizon]. Symbolic when both inputs are expressions.
GrowthClassVerdict compare_growth(const Growth& a, const Growth& b, std::int64_t horizon,
                                  const CompareConfig& cfg = {});

// Pointwise-max representative; lexicographically larger one for expressions.
Growth sup_pair(const Growth& a, const Growth& b);

// Prefix maxima of a family: chain[k] = sup of the first k+1 inputs.
struct ChainSup {
  std::vector<Growth> chain;
};
ChainSup ordered_chain(const std::vector<Growth>& gamma);

// Bounded-jump witness: C with a(n+1) <= C a(n) across the horizon, absent
// when the consecutive-ratio sequence trends upward.
std::optional<Rat> check_bounded_jump(const Growth& a, std::int64_t horizon,
                                      const CompareConfig& cfg = {});

// Linear-invariance witnesses c1 <= a(mn)/a(n) <= c2; absent for exponential
// growth or when the ratio window is unbounded/trending.
std::optional<std::pair<Rat, Rat>> check_linear_invariance(const Growth& a, std::int64_t m,
                                                           std::int64_t horizon,
                                                           const CompareConfig& cfg = {});

struct LipExtension {
  bool holds = false;
  Rat c1{0};
  Rat c2{0};
  Rat chain_bound{0};  // c2(base)^ceil(log2 m)
};

// Extends a verified m=2 invariance to general m via the squaring chain.
// Throws if the m=2 check fails (precondition).
LipExtension linear_invariance_power(const Growth& a, std::int64_t m, std::int64_t horizon,
                                     const CompareConfig& cfg = {});

struct Projection {
  Rat value{0};
  bool infinite = false;
  bool estimate = false;  // true for finite-horizon empirical readouts
};

// Exponential-scale projection: rate r symbolically, max of log a(n) / n over
// the tail half-window empirically.
Projection exp_projection(const Growth& a, std::int64_t horizon);

// Polynomial-scale projection: t symbolically (infinite when r > 0),
// least-squares slope of log a vs log n on the tail half-window empirically.
Projection poly_projection(const Growth& a, std::int64_t horizon);

struct SyndeticSet {
  std::int64_t gap = 1;
  std::int64_t offset = 0;
  std::vector<std::int64_t> members(std::int64_t horizon) const;
};

// Transfers agreement of a and b on S to all of [1, horizon] using a's
// bounded-jump constant; the lower witness carries the C^gap bridge.
GrowthClassVerdict syndetic_transfer(const Growth& a, const Growth& b, const SyndeticSet& s,
                                     std::int64_t horizon, const CompareConfig& cfg = {});

}  // namespace growthforge
