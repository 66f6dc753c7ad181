#include "growthforge/finite_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace growthforge {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::int32_t p) { return Bits((static_cast<size_t>(p) + 63) / 64, 0); }
void set_bit(Bits& b, std::int32_t i) { b[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
bool get_bit(const Bits& b, std::int32_t i) {
  return (b[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
}
std::int64_t popcount(const Bits& b) {
  std::int64_t c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}
std::int64_t and_popcount(const Bits& a, const Bits& b) {
  std::int64_t c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & ~b[i]);
  return c;
}

// Orbit positions pos[k][i] = f^k(i) for k < n.
std::vector<std::vector<std::int32_t>> orbit_table(const FiniteSystem& sys, std::int64_t n) {
  std::vector<std::vector<std::int32_t>> pos(static_cast<size_t>(n));
  pos[0].resize(static_cast<size_t>(sys.size()));
  for (std::int32_t i = 0; i < sys.size(); ++i) pos[0][static_cast<size_t>(i)] = i;
  for (std::int64_t k = 1; k < n; ++k) {
    pos[static_cast<size_t>(k)].resize(static_cast<size_t>(sys.size()));
    for (std::int32_t i = 0; i < sys.size(); ++i)
      pos[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          sys.next(pos[static_cast<size_t>(k - 1)][static_cast<size_t>(i)]);
  }
  return pos;
}

std::int32_t dyn_rank(const FiniteSystem& sys,
                      const std::vector<std::vector<std::int32_t>>& pos, std::int32_t x,
                      std::int32_t y, std::int64_t n) {
  std::int32_t best = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    std::int32_t r = sys.rank(pos[static_cast<size_t>(k)][static_cast<size_t>(x)],
                              pos[static_cast<size_t>(k)][static_cast<size_t>(y)]);
    if (r > best) best = r;
  }
  return best;
}

// Dynamical balls of radius eps as point bitsets.
std::vector<Bits> dyn_balls(const FiniteSystem& sys, std::int64_t n, std::int32_t threshold) {
  auto pos = orbit_table(sys, n);
  std::vector<Bits> balls(static_cast<size_t>(sys.size()), make_bits(sys.size()));
  for (std::int32_t x = 0; x < sys.size(); ++x) {
    set_bit(balls[static_cast<size_t>(x)], x);
    for (std::int32_t y = x + 1; y < sys.size(); ++y) {
      if (dyn_rank(sys, pos, x, y, n) < threshold) {
        set_bit(balls[static_cast<size_t>(x)], y);
        set_bit(balls[static_cast<size_t>(y)], x);
      }
    }
  }
  return balls;
}

}  // namespace

FiniteSystem::FiniteSystem(std::vector<std::vector<Rat>> dist, std::vector<std::int32_t> next) {
  p_ = static_cast<std::int32_t>(dist.size());
  if (p_ < 1) throw std::invalid_argument("empty system");
  if (static_cast<std::int32_t>(next.size()) != p_)
    throw std::invalid_argument("map size does not match point count");
  for (std::int32_t i : next)
    if (i < 0 || i >= p_) throw std::invalid_argument("map image out of range");
  for (std::int32_t i = 0; i < p_; ++i) {
    if (static_cast<std::int32_t>(dist[static_cast<size_t>(i)].size()) != p_)
      throw std::invalid_argument("distance matrix is not square");
    if (dist[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
      throw std::invalid_argument("nonzero diagonal distance");
    for (std::int32_t j = 0; j < p_; ++j) {
      const Rat& v = dist[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v < 0) throw std::invalid_argument("negative distance");
      if (i != j && v == 0) throw std::invalid_argument("distinct points at distance zero");
      if (v != dist[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw std::invalid_argument("asymmetric distance matrix");
    }
  }
  if (p_ <= 128) {
    for (std::int32_t i = 0; i < p_; ++i)
      for (std::int32_t j = 0; j < p_; ++j)
        for (std::int32_t k = 0; k < p_; ++k)
          if (dist[i][j] > dist[i][k] + dist[k][j])
            throw std::invalid_argument("triangle inequality violated");
  }

  std::map<Rat, std::int32_t> order;
  for (const auto& row : dist)
    for (const Rat& v : row) order.emplace(v, 0);
  rank_values_.reserve(order.size());
  for (auto& [v, r] : order) {
    r = static_cast<std::int32_t>(rank_values_.size());
    rank_values_.push_back(v);
  }
  ranks_.resize(static_cast<size_t>(p_) * p_);
  for (std::int32_t i = 0; i < p_; ++i)
    for (std::int32_t j = 0; j < p_; ++j)
      ranks_[static_cast<size_t>(i) * p_ + j] =
          order.at(dist[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  next_ = std::move(next);
}

FiniteSystem FiniteSystem::circle_rotation(std::int32_t points, std::int32_t rot) {
  FiniteSystem sys;
  sys.p_ = points;
  sys.next_.resize(static_cast<size_t>(points));
  for (std::int32_t i = 0; i < points; ++i)
    sys.next_[static_cast<size_t>(i)] = static_cast<std::int32_t>((i + rot) % points);
  sys.rank_values_.reserve(static_cast<size_t>(points / 2 + 1));
  for (std::int32_t k = 0; k <= points / 2; ++k) sys.rank_values_.push_back(Rat(k, points));
  sys.ranks_.resize(static_cast<size_t>(points) * points);
  for (std::int32_t i = 0; i < points; ++i)
    for (std::int32_t j = 0; j < points; ++j) {
      std::int32_t gap = i > j ? i - j : j - i;
      sys.ranks_[static_cast<size_t>(i) * points + j] = std::min(gap, points - gap);
    }
  return sys;
}

FiniteSystem FiniteSystem::circle_doubling(std::int32_t points) {
  FiniteSystem sys = circle_rotation(points, 0);
  for (std::int32_t i = 0; i < points; ++i)
    sys.next_[static_cast<size_t>(i)] = static_cast<std::int32_t>((2ll * i) % points);
  return sys;
}

std::int32_t FiniteSystem::iterate(std::int32_t i, std::int64_t k) const {
  std::int32_t x = i;
  for (std::int64_t step = 0; step < k; ++step) x = next(x);
  return x;
}

Rat FiniteSystem::dist(std::int32_t i, std::int32_t j) const {
  return rank_values_[static_cast<size_t>(rank(i, j))];
}

Rat FiniteSystem::diameter() const { return rank_values_.back(); }

std::int32_t FiniteSystem::rank_threshold(const Rat& eps) const {
  auto it = std::lower_bound(rank_values_.begin(), rank_values_.end(), eps);
  return static_cast<std::int32_t>(it - rank_values_.begin());
}

std::string to_string(CountTag t) {
  switch (t) {
    case CountTag::GreedyLower: return "greedy-lower";
    case CountTag::GreedyUpper: return "greedy-upper";
    default: return "exact";
  }
}

Rat dyn_dist(const FiniteSystem& sys, std::int32_t x, std::int32_t y, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("dyn_dist: n must be >= 1");
  std::int32_t a = x, b = y, best = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    best = std::max(best, sys.rank(a, b));
    a = sys.next(a);
    b = sys.next(b);
  }
  return sys.rank_values()[static_cast<size_t>(best)];
}

CountResult separated_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  std::int32_t t = sys.rank_threshold(eps);
  auto pos = orbit_table(sys, n);
  if (sys.size() <= 16) {
    // Exact maximum via subset search over pair conflicts.
    std::int32_t p = sys.size();
    std::vector<std::uint32_t> conflict(static_cast<size_t>(p), 0);
    for (std::int32_t x = 0; x < p; ++x)
      for (std::int32_t y = x + 1; y < p; ++y)
        if (dyn_rank(sys, pos, x, y, n) < t) {
          conflict[static_cast<size_t>(x)] |= 1u << y;
          conflict[static_cast<size_t>(y)] |= 1u << x;
        }
    std::int64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      bool ok = true;
      for (std::int32_t x = 0; x < p && ok; ++x)
        if ((mask >> x) & 1)
          if (mask & conflict[static_cast<size_t>(x)]) ok = false;
      if (ok) best = std::max<std::int64_t>(best, __builtin_popcount(mask));
    }
    return {best, CountTag::Exact};
  }
  std::vector<std::int32_t> kept;
  for (std::int32_t x = 0; x < sys.size(); ++x) {
    bool far = true;
    for (std::int32_t y : kept)
      if (dyn_rank(sys, pos, x, y, n) < t) {
        far = false;
        break;
      }
    if (far) kept.push_back(x);
  }
  return {static_cast<std::int64_t>(kept.size()), CountTag::GreedyLower};
}

CountResult spanning_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  std::int32_t t = sys.rank_threshold(eps);
  auto balls = dyn_balls(sys, n, t);
  Bits covered = make_bits(sys.size());
  std::int64_t picked = 0;
  std::int64_t remaining = sys.size();
  while (remaining > 0) {
    std::int32_t best = -1;
    std::int64_t best_gain = -1;
    for (std::int32_t x = 0; x < sys.size(); ++x) {
      std::int64_t gain = and_popcount(balls[static_cast<size_t>(x)], covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    if (best_gain <= 0) throw std::logic_error("spanning greedy stalled");
    for (size_t w = 0; w < covered.size(); ++w) covered[w] |= balls[static_cast<size_t>(best)][w];
    remaining = sys.size() - popcount(covered);
    ++picked;
  }
  return {picked, CountTag::GreedyUpper};
}

CountResult exact_spanning_count(const FiniteSystem& sys, std::int64_t n, const Rat& eps) {
  if (sys.size() > 20) throw std::invalid_argument("exact spanning limited to 20 points");
  std::int32_t t = sys.rank_threshold(eps);
  auto balls = dyn_balls(sys, n, t);
  std::int32_t p = sys.size();
  std::uint32_t full = p == 32 ? 0xffffffffu : ((1u << p) - 1);
  std::vector<std::uint32_t> ball_mask(static_cast<size_t>(p), 0);
  for (std::int32_t x = 0; x < p; ++x)
    for (std::int32_t y = 0; y < p; ++y)
      if (get_bit(balls[static_cast<size_t>(x)], y)) ball_mask[static_cast<size_t>(x)] |= 1u << y;
  std::int64_t best = p;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::int64_t size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::uint32_t cov = 0;
    for (std::int32_t x = 0; x < p; ++x)
      if ((mask >> x) & 1) cov |= ball_mask[static_cast<size_t>(x)];
    if (cov == full) best = size;
  }
  return {best, CountTag::Exact};
}

namespace {

std::vector<Bits> refine_cover(const FiniteSystem& sys,
                               const std::vector<std::vector<std::int32_t>>& cover,
                               std::int64_t n) {
  Bits all = make_bits(sys.size());
  std::vector<Bits> members;
  for (const auto& set : cover) {
    Bits b = make_bits(sys.size());
    for (std::int32_t i : set) {
      if (i < 0 || i >= sys.size()) throw std::invalid_argument("cover element out of range");
      set_bit(b, i);
      set_bit(all, i);
    }
    members.push_back(std::move(b));
  }
  if (popcount(all) != sys.size()) throw std::invalid_argument("input does not cover the space");
  auto pos = orbit_table(sys, n);
  std::vector<Bits> refined = members;
  for (std::int64_t k = 1; k < n; ++k) {
    std::vector<Bits> pre(members.size(), make_bits(sys.size()));
    for (size_t u = 0; u < members.size(); ++u)
      for (std::int32_t x = 0; x < sys.size(); ++x)
        if (get_bit(members[u], pos[static_cast<size_t>(k)][static_cast<size_t>(x)]))
          set_bit(pre[u], x);
    std::vector<Bits> next_layer;
    for (const Bits& v : refined)
      for (const Bits& q : pre) {
        Bits cell = v;
        bool nonempty = false;
        for (size_t w = 0; w < cell.size(); ++w) {
          cell[w] &= q[w];
          nonempty = nonempty || cell[w];
        }
        if (nonempty) next_layer.push_back(std::move(cell));
      }
    std::sort(next_layer.begin(), next_layer.end());
    next_layer.erase(std::unique(next_layer.begin(), next_layer.end()), next_layer.end());
    refined = std::move(next_layer);
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
  return refined;
}

std::int64_t greedy_cover_size(const std::vector<Bits>& sets, std::int32_t universe) {
  Bits covered(sets.empty() ? Bits() : Bits(sets[0].size(), 0));
  std::int64_t picked = 0;
  std::int64_t covered_count = 0;
  while (covered_count < universe) {
    std::int64_t best_gain = -1;
    size_t best = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      std::int64_t gain = and_popcount(sets[i], covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain <= 0) throw std::logic_error("cover greedy stalled");
    for (size_t w = 0; w < covered.size(); ++w) covered[w] |= sets[best][w];
    covered_count = popcount(covered);
    ++picked;
  }
  return picked;
}

void cover_branch(const std::vector<Bits>& sets, const Bits& covered, std::int32_t universe,
                  std::int64_t covered_count, std::int64_t chosen, std::int64_t& best) {
  if (covered_count == universe) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + 1 >= best) return;
  // Branch on the lowest uncovered point.
  std::int32_t pivot = -1;
  for (size_t w = 0; w < covered.size() && pivot < 0; ++w) {
    std::uint64_t free = ~covered[w];
    if (w + 1 == covered.size() && universe % 64)
      free &= (1ull << (universe % 64)) - 1;
    if (free) pivot = static_cast<std::int32_t>(w * 64 + __builtin_ctzll(free));
  }
  if (pivot < 0) return;
  for (const Bits& s : sets) {
    if (!get_bit(s, pivot)) continue;
    Bits merged = covered;
    for (size_t w = 0; w < merged.size(); ++w) merged[w] |= s[w];
    cover_branch(sets, merged, universe, popcount(merged), chosen + 1, best);
  }
}

}  // namespace

std::int64_t refined_cover_size(const FiniteSystem& sys,
                                const std::vector<std::vector<std::int32_t>>& cover,
                                std::int64_t n) {
  if (n < 1) throw std::invalid_argument("refinement depth must be >= 1");
  return static_cast<std::int64_t>(refine_cover(sys, cover, n).size());
}

CountResult cover_count(const FiniteSystem& sys,
                        const std::vector<std::vector<std::int32_t>>& cover, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("refinement depth must be >= 1");
  std::vector<Bits> refined = refine_cover(sys, cover, n);
  if (static_cast<std::int64_t>(refined.size()) <= 20) {
    std::int64_t best = greedy_cover_size(refined, sys.size());
    Bits covered = make_bits(sys.size());
    cover_branch(refined, covered, sys.size(), 0, 0, best);
    return {best, CountTag::Exact};
  }
  return {greedy_cover_size(refined, sys.size()), CountTag::GreedyUpper};
}

}  // namespace growthforge
