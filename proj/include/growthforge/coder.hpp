#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthforge/compare.hpp"
#include "growthforge/interval_tree.hpp"
#include "growthforge/plan.hpp"

namespace growthforge {

// Length-n itinerary over {Y_1, ..., Y_{L+2}, infinity}: sparse list of
// (position, symbol) hits, both strictly increasing, at most one per symbol.
struct CodingWord {
  std::int64_t n = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> hits;

  bool all_infinity() const { return hits.empty(); }
  std::string dump() const;  // "pos:sym,pos:sym" ("-" when empty)

  friend bool operator==(const CodingWord&, const CodingWord&) = default;
};

// Window [start, start+n) of the tuple's hit sequence.
CodingWord word_from_window(const JumpTuple& tuple, std::int64_t start, std::int64_t n);

struct WordCountEntry {
  std::int64_t n = 0;
  BigInt count{0};
  std::int64_t k1_bound = 0;
  bool complete = false;
};

struct WordCountTable {
  std::vector<WordCountEntry> entries;  // ascending n

  const WordCountEntry& at_n(std::int64_t n) const;
  bool has_n(std::int64_t n) const;
  // Counts as a growth representative (requires >= 16 dense leading entries).
  TabulatedGrowth to_growth() const;
};

// Exact number of distinct coding words of length n: tuple windows over all
// k1 <= k1_max, plus the single-symbol words and the all-infinity word.
// strict demands k1_max >= n (completeness).
WordCountEntry count_words(const ConstructionPlan& plan, std::int64_t n, std::int64_t k1_max,
                           bool strict = true);

// count_words for each n in `ns` (parallel across n, deterministic).
WordCountTable count_words_table(const ConstructionPlan& plan, const std::vector<std::int64_t>& ns,
                                 std::int64_t k1_max, bool strict = true);

struct SyndeticBoundsResult {
  GrowthClassVerdict verdict;
  Rat d1{0}, d2{0};   // min/max of c(n)/a(n) over S
  Rat bjp_constant{0};
};

// Checks d1 a(n) <= c(n) <= d2 a(n) on S = (2L+2)N and extends the verdict
// to all n via the counts' bounded-jump constant.
SyndeticBoundsResult verify_syndetic_bounds(const ConstructionPlan& plan,
                                            const WordCountTable& counts, std::int64_t horizon,
                                            const PlanConfig& cfg = {});

// Stage alphabets are disjoint; only the all-infinity word is shared.
WordCountEntry count_words_composite(const CompositePlan& composite, std::int64_t n,
                                     std::int64_t k1_max, bool strict = true);
WordCountTable count_words_composite_table(const CompositePlan& composite,
                                           const std::vector<std::int64_t>& ns,
                                           std::int64_t k1_max, bool strict = true);

// Single crossing set toy (compactified translation): c(n) = n + 1, by
// enumeration rather than formula.
WordCountTable translation_word_counts(std::int64_t n_max);

}  // namespace growthforge
