#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "growthforge/numeric.hpp"

namespace growthforge {

// Closed symbolic family n^t (1+log n)^s (1+log(1+log n))^u e^{rn}.
// Sequences are taken as their nondecreasing envelope so every instance
// is a legal growth representative from n = 1 on.
struct GrowthExpr {
  Rat t{0};
  Rat s{0};
  Rat u{0};
  Rat r{0};

  GrowthExpr() = default;
  GrowthExpr(Rat t_, Rat s_, Rat u_, Rat r_);

  bool subexponential() const { return r == 0; }

  // Raw formula value at n (before envelope), as a double in log space.
  double log_value_raw(std::int64_t n) const;

  // Envelope value in log space: max over m <= n.
  double log_value(std::int64_t n) const;

  // Exact when the formula is integral (s == u == r == 0, integer t >= 0);
  // otherwise the double-derived rational, enveloped either way.
  Rat value(std::int64_t n) const;

  std::string label() const;

  friend bool operator==(const GrowthExpr&, const GrowthExpr&) = default;
};

// Lexicographic class order on (r, t, s, u); total on the symbolic family.
int lex_compare(const GrowthExpr& a, const GrowthExpr& b);

struct TabulatedGrowth {
  explicit TabulatedGrowth(std::vector<Rat> values);

  std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }
  const Rat& at(std::int64_t n) const;  // 1-indexed
  const std::vector<Rat>& values() const { return values_; }

 private:
  std::vector<Rat> values_;
};

inline constexpr std::int64_t kMinHorizon = 16;
inline constexpr std::int64_t kUnboundedLength = std::numeric_limits<std::int64_t>::max();

// A growth representative: symbolic expression or finite table.
class Growth {
 public:
  Growth(GrowthExpr e) : rep_(std::move(e)) {}
  Growth(TabulatedGrowth t) : rep_(std::move(t)) {}

  bool symbolic() const { return std::holds_alternative<GrowthExpr>(rep_); }
  const GrowthExpr& expr() const { return std::get<GrowthExpr>(rep_); }
  const TabulatedGrowth& table() const { return std::get<TabulatedGrowth>(rep_); }

  std::int64_t length() const {
    return symbolic() ? kUnboundedLength : table().length();
  }
  Rat value(std::int64_t n) const {
    return symbolic() ? expr().value(n) : table().at(n);
  }
  double log_value(std::int64_t n) const {
    return symbolic() ? expr().log_value(n) : log_rational(table().at(n));
  }
  std::string label() const;

 private:
  std::variant<GrowthExpr, TabulatedGrowth> rep_;
};

// Materializes the first `horizon` values (envelope applied for expressions).
TabulatedGrowth tabulate(const GrowthExpr& e, std::int64_t horizon);
TabulatedGrowth tabulate(const Growth& g, std::int64_t horizon);

GrowthExpr poly(const Rat& t);
GrowthExpr polylog(const Rat& t, const Rat& s);
GrowthExpr exponential(const Rat& r);

}  // namespace growthforge
