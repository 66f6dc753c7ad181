#include "growthforge/plan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace growthforge {

namespace {

// Largest product b*c <= w with b, c <= cap; smallest b among maximizers.
std::pair<BigInt, std::pair<std::int64_t, std::int64_t>> best_two(const BigInt& w,
                                                                  std::int64_t cap) {
  BigInt best = 0;
  std::pair<std::int64_t, std::int64_t> bc{1, 1};
  std::int64_t bmax = w < cap ? static_cast<std::int64_t>(w) : cap;
  for (std::int64_t b = 1; b <= bmax; ++b) {
    BigInt q = floor_div(w, BigInt(b));
    std::int64_t c = q < cap ? static_cast<std::int64_t>(q) : cap;
    if (c < 1) break;
    BigInt p = BigInt(b) * c;
    if (p > best) {
      best = p;
      bc = {b, c};
    }
  }
  return {best, bc};
}

// Largest product of three factors <= cap with product <= w.
std::pair<BigInt, std::vector<std::int64_t>> best_three(const BigInt& w, std::int64_t cap) {
  BigInt best = 0;
  std::vector<std::int64_t> abc{1, 1, 1};
  std::int64_t amax = w < cap ? static_cast<std::int64_t>(w) : cap;
  for (std::int64_t a = 1; a <= amax; ++a) {
    BigInt q = floor_div(w, BigInt(a));
    auto [p2, bc] = best_two(q, cap);
    BigInt p = BigInt(a) * p2;
    if (p > best) {
      best = p;
      abc = {a, bc.first, bc.second};
    }
  }
  return {best, abc};
}

}  // namespace

std::vector<std::int64_t> factor_split(const BigInt& e_value, std::int64_t n, std::int64_t L) {
  if (n < 1 || L < 1) throw std::invalid_argument("factor_split: bad n or L");
  if (e_value < 1 || e_value > ipow(BigInt(n), static_cast<std::uint64_t>(L)))
    throw std::invalid_argument("factor_split: e outside [1, n^L]");

  std::vector<std::int64_t> out;
  BigInt prod = 1;
  BigInt rem = e_value;
  std::int64_t slots = L;
  // Balanced prefix keeps factors near rem^(1/slots) until an exact
  // three-slot search is affordable.
  while (slots > 3) {
    BigInt root = iroot(rem, static_cast<unsigned>(slots));
    if (ipow(root, static_cast<unsigned>(slots)) < rem) ++root;
    BigInt cand = root > n ? BigInt(n) : root;
    BigInt cap = floor_div(e_value, prod);
    if (cand > cap) cand = cap;
    if (cand < 1) cand = 1;
    std::int64_t a = static_cast<std::int64_t>(cand);
    out.push_back(a);
    prod *= a;
    rem = floor_div(e_value, prod);
    --slots;
  }
  if (slots == 1) {
    BigInt cap = floor_div(e_value, prod);
    std::int64_t a = cap > n ? n : static_cast<std::int64_t>(cap);
    out.push_back(std::max<std::int64_t>(1, a));
  } else if (slots == 2) {
    auto [p, bc] = best_two(floor_div(e_value, prod), n);
    (void)p;
    out.push_back(bc.first);
    out.push_back(bc.second);
  } else {
    auto [p, abc] = best_three(floor_div(e_value, prod), n);
    (void)p;
    out.insert(out.end(), abc.begin(), abc.end());
  }
  // Largest multiplicity first: early symbols carry the variation, which the
  // partially visible words can actually express.
  std::sort(out.begin(), out.end(), std::greater<>());

  BigInt achieved = 1;
  for (std::int64_t a : out) {
    if (a < 1 || a > n) throw std::logic_error("factor_split: factor out of range");
    achieved *= a;
  }
  if (achieved > e_value || achieved * ipow(BigInt(2), static_cast<std::uint64_t>(L)) < e_value)
    throw std::logic_error("factor_split: product outside [e/2^L, e]");
  return out;
}

std::int64_t choose_L(const Growth& target, std::int64_t horizon, const PlanConfig& cfg) {
  Projection pp = poly_projection(target, horizon);
  if (pp.infinite)
    throw std::domain_error(
        "target exceeds every polynomial class; the construction needs [n^2] <= target <= "
        "sup of the polynomial scale");
  auto below = compare_growth(target, Growth(poly(2)), horizon, cfg.compare());
  if (below.relation == Relation::StrictlyLess || below.relation == Relation::NoVerdict)
    throw std::domain_error(
        "target below [n^2]; the construction needs [n^2] <= target <= sup of the "
        "polynomial scale");
  for (std::int64_t L = 3; L <= 64; ++L) {
    auto v = compare_growth(target, Growth(poly(L)), horizon, cfg.compare());
    if (v.relation == Relation::StrictlyLess || v.relation == Relation::Equivalent) return L;
  }
  throw std::domain_error("no polynomial bound n^L with L <= 64 fits the target");
}

ConstructionPlan build_sequences(const Growth& target, std::int64_t L, std::int64_t N,
                                 const PlanConfig& cfg) {
  if (L < 3) throw std::invalid_argument("build_sequences: L must be >= 3");
  if (N < kMinHorizon) throw std::invalid_argument("build_sequences: N below 16");
  if (!check_bounded_jump(target, N, cfg.compare()))
    throw std::domain_error("build_sequences: target lacks the bounded jump property");

  TabulatedGrowth tv = tabulate(target, N);

  ConstructionPlan plan;
  plan.L = L;
  plan.N = N;
  plan.target_values = tv.values();
  plan.e.reserve(static_cast<size_t>(N));
  plan.factors.reserve(static_cast<size_t>(N));
  plan.d.reserve(static_cast<size_t>(N));

  plan.e.push_back(1);
  plan.factors.push_back(std::vector<std::int64_t>(static_cast<size_t>(L), 1));
  BigInt sum_achieved = 1;
  plan.d.push_back(1);

  for (std::int64_t n = 1; n < N; ++n) {
    Rat ratio = tv.at(n + 1) / tv.at(n);
    Rat recurrence = (ratio - Rat(n + 1, n)) * Rat(plan.d_at(n), n + 1);
    BigInt requested = round_half_up(recurrence);
    BigInt cap = ipow(BigInt(n + 1), static_cast<std::uint64_t>(L));
    if (requested < 1) requested = 1;
    if (requested > cap) requested = cap;
    auto fac = factor_split(requested, n + 1, L);
    BigInt achieved = 1;
    for (std::int64_t a : fac) achieved *= a;
    plan.e.push_back(achieved);
    plan.factors.push_back(std::move(fac));
    sum_achieved += achieved;
    plan.d.push_back(BigInt(n + 1) * sum_achieved);
  }

  plan.slack_log.reserve(static_cast<size_t>(N));
  bool first = true;
  for (std::int64_t n = 1; n <= N; ++n) {
    Rat ratio = Rat(plan.d_at(n)) / tv.at(n);
    plan.slack_log.push_back(log_rational(ratio));
    if (n < kBurnIn) continue;
    if (first) {
      plan.b1 = plan.b2 = ratio;
      first = false;
    } else {
      if (ratio < plan.b1) plan.b1 = ratio;
      if (ratio > plan.b2) plan.b2 = ratio;
    }
  }
  if (plan.b1 <= 0 || plan.b2 > cfg.slack * plan.b1) {
    std::ostringstream os;
    os << "plan rejected: witness interval [" << rat_to_string(plan.b1) << ", "
       << rat_to_string(plan.b2) << "] wider than slack " << rat_to_string(cfg.slack);
    throw std::runtime_error(os.str());
  }
  return plan;
}

std::int64_t ConstructionPlan::factor(std::int64_t i, std::int64_t n) const {
  if (i < 2 || i > L + 1) throw std::out_of_range("factor index");
  return factors[static_cast<size_t>(n - 1)][static_cast<size_t>(i - 2)];
}

CompositePlan build_composite(const ChainSup& chain, std::int64_t K, std::int64_t N,
                              const PlanConfig& cfg) {
  if (K < 1 || K > static_cast<std::int64_t>(chain.chain.size()))
    throw std::invalid_argument("build_composite: K outside [1, chain length]");
  CompositePlan comp;
  comp.K = K;
  for (std::int64_t k = 0; k < K; ++k) {
    const Growth& target = chain.chain[static_cast<size_t>(k)];
    std::int64_t L = choose_L(target, N, cfg);
    comp.stages.push_back(build_sequences(target, L, N, cfg));
  }
  return comp;
}

}  // namespace growthforge
