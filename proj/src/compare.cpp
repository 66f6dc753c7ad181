#include "growthforge/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace growthforge {

namespace {

void require_horizon(const Growth& a, const Growth& b, std::int64_t horizon) {
  if (horizon < kMinHorizon) throw std::invalid_argument("horizon below 16");
  if (horizon > a.length() || horizon > b.length())
    throw std::invalid_argument("horizon exceeds available data");
}

// Ratio of second-half to first-half geometric means of exp(values).
double geomean_trend(const std::vector<double>& log_values) {
  size_t sz = log_values.size();
  if (sz < 2) return 1.0;
  size_t half = sz / 2;
  double m1 = 0, m2 = 0;
  for (size_t i = 0; i < half; ++i) m1 += log_values[i];
  for (size_t i = half; i < sz; ++i) m2 += log_values[i];
  m1 /= static_cast<double>(half);
  m2 /= static_cast<double>(sz - half);
  return std::exp(m2 - m1);
}

struct RatioScan {
  std::vector<Rat> full;      // ratios on [1, horizon]
  Rat full_min, full_max;
  Rat win_min, win_max;
  double trend = 1.0;         // over the window
  std::int64_t win_lo = 1;
};

RatioScan scan_ratios(const Growth& a, const Growth& b, std::int64_t horizon) {
  RatioScan rs;
  rs.win_lo = std::max<std::int64_t>(1, horizon / 2);
  rs.full.reserve(static_cast<size_t>(horizon));
  std::vector<double> win_logs;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    Rat va = a.value(n), vb = b.value(n);
    if (va <= 0 || vb <= 0) throw std::domain_error("non-positive growth value");
    Rat rho = va / vb;
    rs.full.push_back(rho);
    if (n == 1) {
      rs.full_min = rs.full_max = rho;
    } else {
      if (rho < rs.full_min) rs.full_min = rho;
      if (rho > rs.full_max) rs.full_max = rho;
    }
    if (n >= rs.win_lo) {
      if (win_logs.empty()) {
        rs.win_min = rs.win_max = rho;
      } else {
        if (rho < rs.win_min) rs.win_min = rho;
        if (rho > rs.win_max) rs.win_max = rho;
      }
      win_logs.push_back(log_rational(rho));
    }
  }
  rs.trend = geomean_trend(win_logs);
  return rs;
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "EQUIV";
    case Relation::StrictlyLess: return "STRICTLY_LESS";
    case Relation::StrictlyGreater: return "STRICTLY_GREATER";
    default: return "NO_VERDICT";
  }
}

std::string to_string(VerdictMode m) {
  return m == VerdictMode::Symbolic ? "SYMBOLIC" : "EMPIRICAL";
}

GrowthClassVerdict compare_growth(const Growth& a, const Growth& b, std::int64_t horizon,
                                  const CompareConfig& cfg) {
  if (horizon < kMinHorizon) throw std::invalid_argument("horizon below 16");
  if (a.symbolic() && b.symbolic()) {
    GrowthClassVerdict v;
    v.mode = VerdictMode::Symbolic;
    v.horizon = 0;
    v.c1 = v.c2 = 1;
    int c = lex_compare(a.expr(), b.expr());
    v.relation = c < 0   ? Relation::StrictlyLess
                 : c > 0 ? Relation::StrictlyGreater
                         : Relation::Equivalent;
    return v;
  }
  require_horizon(a, b, horizon);

  RatioScan rs = scan_ratios(a, b, horizon);
  Rat inv_slack = Rat(1) / cfg.slack;
  double f = cfg.trend_factor;

  GrowthClassVerdict v;
  v.mode = VerdictMode::Empirical;
  v.horizon = horizon;
  v.c1 = rs.win_min;
  v.c2 = rs.win_max;

  bool no_trend = rs.trend <= f && rs.trend >= 1.0 / f;
  if ((rs.trend > f && rs.win_max > cfg.slack) || rs.win_min > cfg.slack) {
    v.relation = Relation::StrictlyGreater;
  } else if ((rs.trend < 1.0 / f && rs.win_min < inv_slack) || rs.win_max < inv_slack) {
    v.relation = Relation::StrictlyLess;
  } else if (no_trend && rs.win_max <= cfg.slack * rs.win_min) {
    v.relation = Relation::Equivalent;
    v.c1 = rs.full_min;
    v.c2 = rs.full_max;
  } else {
    v.relation = Relation::NoVerdict;
  }
  return v;
}

Growth sup_pair(const Growth& a, const Growth& b) {
  if (a.symbolic() && b.symbolic())
    return lex_compare(a.expr(), b.expr()) >= 0 ? a : b;
  std::int64_t len = std::min(a.length(), b.length());
  if (len < kMinHorizon) throw std::invalid_argument("sup_pair: horizons incompatible");
  std::vector<Rat> vals;
  vals.reserve(static_cast<size_t>(len));
  for (std::int64_t n = 1; n <= len; ++n) vals.push_back(std::max(a.value(n), b.value(n)));
  return Growth(TabulatedGrowth(std::move(vals)));
}

ChainSup ordered_chain(const std::vector<Growth>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("ordered_chain: empty family");
  ChainSup cs;
  cs.chain.reserve(gamma.size());
  cs.chain.push_back(gamma.front());
  for (size_t i = 1; i < gamma.size(); ++i)
    cs.chain.push_back(sup_pair(cs.chain.back(), gamma[i]));
  return cs;
}

std::optional<Rat> check_bounded_jump(const Growth& a, std::int64_t horizon,
                                      const CompareConfig& cfg) {
  if (horizon < kMinHorizon) throw std::invalid_argument("horizon below 16");
  if (a.symbolic()) {
    // Ratio peaks at small n throughout the closed family.
    std::int64_t scan = std::min<std::int64_t>(horizon, 256);
    Rat best = 0;
    for (std::int64_t n = 1; n < scan; ++n) {
      Rat rho = a.value(n + 1) / a.value(n);
      if (rho > best) best = rho;
    }
    return best;
  }
  if (horizon > a.length()) throw std::invalid_argument("horizon exceeds available data");
  std::vector<Rat> ratios;
  std::vector<double> logs;
  ratios.reserve(static_cast<size_t>(horizon - 1));
  for (std::int64_t n = 1; n < horizon; ++n) {
    Rat rho = a.value(n + 1) / a.value(n);
    ratios.push_back(rho);
    logs.push_back(log_rational(rho));
  }
  double trend = geomean_trend(logs);
  if (trend > cfg.trend_factor) return std::nullopt;
  size_t half = ratios.size() / 2;
  Rat max_first = ratios[0], max_all = ratios[0];
  for (size_t i = 0; i < ratios.size(); ++i) {
    if (ratios[i] > max_all) max_all = ratios[i];
    if (i < half && ratios[i] > max_first) max_first = ratios[i];
  }
  if (max_first * Rat(rat_from_double(cfg.trend_factor)) < max_all) return std::nullopt;
  return max_all;
}

std::optional<std::pair<Rat, Rat>> check_linear_invariance(const Growth& a, std::int64_t m,
                                                           std::int64_t horizon,
                                                           const CompareConfig& cfg) {
  if (m < 2) throw std::invalid_argument("linear invariance needs m >= 2");
  if (horizon < kMinHorizon) throw std::invalid_argument("horizon below 16");
  std::int64_t scan = horizon;
  if (a.symbolic()) {
    if (!a.expr().subexponential()) return std::nullopt;
    scan = std::min<std::int64_t>(horizon, 256);
  } else if (m * horizon > a.length()) {
    throw std::invalid_argument("m * horizon exceeds available data");
  }
  std::vector<Rat> ratios;
  std::vector<double> logs;
  ratios.reserve(static_cast<size_t>(scan));
  Rat c1, c2;
  for (std::int64_t n = 1; n <= scan; ++n) {
    Rat rho = a.value(m * n) / a.value(n);
    ratios.push_back(rho);
    logs.push_back(log_rational(rho));
    if (n == 1) c1 = c2 = rho;
    else {
      if (rho < c1) c1 = rho;
      if (rho > c2) c2 = rho;
    }
  }
  if (!a.symbolic()) {
    if (c1 <= 0 || c2 > cfg.slack * c1) return std::nullopt;
    if (geomean_trend(logs) > cfg.trend_factor) return std::nullopt;
  }
  return std::make_pair(c1, c2);
}

LipExtension linear_invariance_power(const Growth& a, std::int64_t m, std::int64_t horizon,
                                     const CompareConfig& cfg) {
  auto base = check_linear_invariance(a, 2, horizon, cfg);
  if (!base) throw std::domain_error("linear invariance fails at m = 2");
  LipExtension ext;
  std::int64_t k = 0;
  for (std::int64_t pow2 = 1; pow2 < m; pow2 *= 2) ++k;
  ext.chain_bound = rat_pow(std::max(base->second, Rat(1)), static_cast<std::uint64_t>(k));
  auto at_m = check_linear_invariance(a, m, horizon, cfg);
  if (at_m) {
    ext.c1 = at_m->first;
    ext.c2 = at_m->second;
    ext.holds = ext.c2 <= ext.chain_bound;
  }
  return ext;
}

Projection exp_projection(const Growth& a, std::int64_t horizon) {
  if (a.symbolic()) return {a.expr().r, false, false};
  if (horizon < kMinHorizon || horizon > a.length())
    throw std::invalid_argument("bad horizon for projection");
  double best = -1e300;
  for (std::int64_t n = std::max<std::int64_t>(1, horizon / 2); n <= horizon; ++n)
    best = std::max(best, a.log_value(n) / static_cast<double>(n));
  return {rat_from_double(std::max(0.0, best)), false, true};
}

Projection poly_projection(const Growth& a, std::int64_t horizon) {
  if (a.symbolic()) {
    if (!a.expr().subexponential()) return {Rat(0), true, false};
    return {a.expr().t, false, false};
  }
  if (horizon < kMinHorizon || horizon > a.length())
    throw std::invalid_argument("bad horizon for projection");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::int64_t lo = std::max<std::int64_t>(1, horizon / 2);
  double count = 0;
  for (std::int64_t n = lo; n <= horizon; ++n) {
    double x = std::log(static_cast<double>(n));
    double y = a.log_value(n);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    count += 1;
  }
  double denom = sxx - sx * sx / count;
  double slope = denom > 0 ? (sxy - sx * sy / count) / denom : 0.0;
  return {rat_from_double(slope), false, true};
}

std::vector<std::int64_t> SyndeticSet::members(std::int64_t horizon) const {
  if (gap < 1) throw std::invalid_argument("syndetic gap must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t n = offset; n <= horizon; n += gap)
    if (n >= 1) out.push_back(n);
  return out;
}

GrowthClassVerdict syndetic_transfer(const Growth& a, const Growth& b, const SyndeticSet& s,
                                     std::int64_t horizon, const CompareConfig& cfg) {
  auto bjp = check_bounded_jump(a, horizon, cfg);
  if (!bjp) throw std::domain_error("syndetic transfer requires the bounded jump property");
  std::vector<std::int64_t> members = s.members(horizon);
  if (members.empty()) throw std::invalid_argument("syndetic set empty in window");
  require_horizon(a, b, horizon);

  std::vector<double> logs;
  Rat c1s, c2s;
  bool first = true;
  for (std::int64_t n : members) {
    Rat rho = a.value(n) / b.value(n);
    logs.push_back(log_rational(rho));
    if (first) { c1s = c2s = rho; first = false; }
    else {
      if (rho < c1s) c1s = rho;
      if (rho > c2s) c2s = rho;
    }
  }

  GrowthClassVerdict v;
  v.mode = VerdictMode::Empirical;
  v.horizon = horizon;
  double trend = geomean_trend(logs);
  if (c2s > cfg.slack * c1s || trend > cfg.trend_factor || trend < 1.0 / cfg.trend_factor) {
    v.relation = Relation::NoVerdict;
    v.c1 = c1s;
    v.c2 = c2s;
    return v;
  }

  Rat o1, o2;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    Rat rho = a.value(n) / b.value(n);
    if (n == 1) { o1 = o2 = rho; }
    else {
      if (rho < o1) o1 = rho;
      if (rho > o2) o2 = rho;
    }
  }
  Rat bridge = rat_pow(*bjp, static_cast<std::uint64_t>(s.gap));
  v.relation = Relation::Equivalent;
  v.c1 = std::min(o1, c1s / bridge);
  v.c2 = std::max(o2, c2s);
  return v;
}

}  // namespace growthforge
