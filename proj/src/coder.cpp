#include "growthforge/coder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "growthforge/parallel.hpp"

namespace growthforge {

namespace {

struct KeyedSetInserter {
  // Packed dedup key: one 32-bit cell per hit, pos << 8 | sym. Positions stay
  // below 2^24 at desk scale; a leading length byte separates word sizes.
  std::unordered_set<std::string> seen;

  bool insert(const std::vector<std::pair<std::int32_t, std::int32_t>>& hits) {
    std::string key;
    key.reserve(hits.size() * 4 + 1);
    key.push_back(static_cast<char>(hits.size()));
    for (auto [p, s] : hits) {
      std::uint32_t cell = (static_cast<std::uint32_t>(p) << 8) |
                           static_cast<std::uint32_t>(s);
      key.push_back(static_cast<char>(cell & 0xff));
      key.push_back(static_cast<char>((cell >> 8) & 0xff));
      key.push_back(static_cast<char>((cell >> 16) & 0xff));
      key.push_back(static_cast<char>((cell >> 24) & 0xff));
    }
    return seen.insert(std::move(key)).second;
  }
};

void enumerate_plan_words(const ConstructionPlan& plan, std::int64_t n, std::int64_t k1_lo,
                          std::int64_t k1_hi, KeyedSetInserter& sink) {
  std::vector<std::pair<std::int32_t, std::int32_t>> hits;
  for (std::int64_t k1 = k1_lo; k1 <= k1_hi; ++k1) {
    for (const JumpTuple& tuple : admissible_tuples(plan, k1)) {
      auto times = tuple.hit_times();
      std::int64_t last = times.back();
      for (std::int64_t start = 1 - n; start <= last; ++start) {
        hits.clear();
        for (size_t i = 0; i < times.size(); ++i) {
          std::int64_t p = times[i] - start;
          if (p >= 0 && p < n)
            hits.emplace_back(static_cast<std::int32_t>(p), static_cast<std::int32_t>(i + 1));
        }
        sink.insert(hits);
      }
    }
  }
}

}  // namespace

std::string CodingWord::dump() const {
  if (hits.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < hits.size(); ++i) {
    if (i) os << ",";
    os << hits[i].first << ":" << hits[i].second;
  }
  return os.str();
}

CodingWord word_from_window(const JumpTuple& tuple, std::int64_t start, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("word_from_window: n must be >= 1");
  CodingWord w;
  w.n = n;
  auto times = tuple.hit_times();
  for (size_t i = 0; i < times.size(); ++i) {
    std::int64_t p = times[i] - start;
    if (p >= 0 && p < n)
      w.hits.emplace_back(static_cast<std::int32_t>(p), static_cast<std::int32_t>(i + 1));
  }
  return w;
}

const WordCountEntry& WordCountTable::at_n(std::int64_t n) const {
  for (const auto& e : entries)
    if (e.n == n) return e;
  throw std::out_of_range("no count for requested n");
}

bool WordCountTable::has_n(std::int64_t n) const {
  for (const auto& e : entries)
    if (e.n == n) return true;
  return false;
}

TabulatedGrowth WordCountTable::to_growth() const {
  std::vector<Rat> vals;
  std::int64_t expect = 1;
  for (const auto& e : entries) {
    if (e.n != expect) break;
    vals.push_back(Rat(e.count));
    ++expect;
  }
  return TabulatedGrowth(std::move(vals));
}

WordCountEntry count_words(const ConstructionPlan& plan, std::int64_t n, std::int64_t k1_max,
                           bool strict) {
  if (n < 1) throw std::invalid_argument("count_words: n must be >= 1");
  if (k1_max > plan.N) throw std::invalid_argument("count_words: k1_max beyond plan");
  bool complete = k1_max >= n;
  if (strict && !complete)
    throw std::invalid_argument("count_words: k1_max below n loses length-n words");

  KeyedSetInserter sink;
  enumerate_plan_words(plan, n, 1, std::min(k1_max, plan.N), sink);
  // Tuples beyond k1_max only isolate one crossing per window.
  std::vector<std::pair<std::int32_t, std::int32_t>> single(1);
  for (std::int32_t sym = 1; sym <= static_cast<std::int32_t>(plan.L + 2); ++sym) {
    for (std::int32_t p = 0; p < n; ++p) {
      single[0] = {p, sym};
      sink.insert(single);
    }
  }
  sink.insert({});

  WordCountEntry entry;
  entry.n = n;
  entry.count = BigInt(sink.seen.size());
  entry.k1_bound = k1_max;
  entry.complete = complete;
  return entry;
}

WordCountTable count_words_table(const ConstructionPlan& plan, const std::vector<std::int64_t>& ns,
                                 std::int64_t k1_max, bool strict) {
  WordCountTable table;
  table.entries.resize(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    table.entries[i] = count_words(plan, ns[i], k1_max, strict);
  });
  std::sort(table.entries.begin(), table.entries.end(),
            [](const WordCountEntry& a, const WordCountEntry& b) { return a.n < b.n; });
  return table;
}

SyndeticBoundsResult verify_syndetic_bounds(const ConstructionPlan& plan,
                                            const WordCountTable& counts, std::int64_t horizon,
                                            const PlanConfig& cfg) {
  std::int64_t gap = 2 * plan.L + 2;
  SyndeticSet s{gap, 0};
  auto members = s.members(horizon);
  if (members.empty()) throw std::invalid_argument("horizon below one syndetic gap");
  for (std::int64_t n : members) {
    if (!counts.has_n(n) || !counts.at_n(n).complete)
      throw std::invalid_argument("counts incomplete on the syndetic set");
  }
  if (horizon > plan.N) throw std::invalid_argument("horizon beyond plan");

  SyndeticBoundsResult res;
  bool first = true;
  for (std::int64_t n : members) {
    Rat rho = Rat(counts.at_n(n).count) / plan.target_at(n);
    if (first) {
      res.d1 = res.d2 = rho;
      first = false;
    } else {
      if (rho < res.d1) res.d1 = rho;
      if (rho > res.d2) res.d2 = rho;
    }
  }

  Growth counts_growth(counts.to_growth());
  if (counts_growth.length() < horizon)
    throw std::invalid_argument("dense counts required up to the horizon");
  auto bjp = check_bounded_jump(counts_growth, horizon, cfg.compare());
  if (!bjp) throw std::domain_error("counts fail the bounded jump property");
  res.bjp_constant = *bjp;

  Growth target_growth(TabulatedGrowth(std::vector<Rat>(
      plan.target_values.begin(), plan.target_values.begin() + static_cast<size_t>(horizon))));
  res.verdict =
      syndetic_transfer(counts_growth, target_growth, s, horizon, cfg.compare());
  return res;
}

WordCountEntry count_words_composite(const CompositePlan& composite, std::int64_t n,
                                     std::int64_t k1_max, bool strict) {
  if (composite.stages.empty()) throw std::invalid_argument("empty composite");
  WordCountEntry entry;
  entry.n = n;
  entry.k1_bound = k1_max;
  entry.complete = true;
  entry.count = 0;
  for (const auto& stage : composite.stages) {
    WordCountEntry e = count_words(stage, n, k1_max, strict);
    entry.count += e.count;
    entry.complete = entry.complete && e.complete;
  }
  entry.count -= static_cast<std::int64_t>(composite.stages.size()) - 1;
  return entry;
}

WordCountTable count_words_composite_table(const CompositePlan& composite,
                                           const std::vector<std::int64_t>& ns,
                                           std::int64_t k1_max, bool strict) {
  WordCountTable table;
  table.entries.resize(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    table.entries[i] = count_words_composite(composite, ns[i], k1_max, strict);
  });
  std::sort(table.entries.begin(), table.entries.end(),
            [](const WordCountEntry& a, const WordCountEntry& b) { return a.n < b.n; });
  return table;
}

WordCountTable translation_word_counts(std::int64_t n_max) {
  // One crossing set, one hit at time 0; enumerate windows and dedupe.
  WordCountTable table;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    KeyedSetInserter sink;
    std::vector<std::pair<std::int32_t, std::int32_t>> hits;
    for (std::int64_t start = 1 - n; start <= 0; ++start) {
      hits.clear();
      std::int64_t p = -start;
      if (p >= 0 && p < n) hits.emplace_back(static_cast<std::int32_t>(p), 1);
      sink.insert(hits);
    }
    sink.insert({});
    WordCountEntry e;
    e.n = n;
    e.count = BigInt(sink.seen.size());
    e.k1_bound = 0;
    e.complete = true;
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace growthforge
