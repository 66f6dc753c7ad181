#include "growthforge/growth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace growthforge {

namespace {

bool lex_nonnegative(const Rat& t, const Rat& s, const Rat& u) {
  if (t != 0) return t > 0;
  if (s != 0) return s > 0;
  return u >= 0;
}

}  // namespace

GrowthExpr::GrowthExpr(Rat t_, Rat s_, Rat u_, Rat r_)
    : t(std::move(t_)), s(std::move(s_)), u(std::move(u_)), r(std::move(r_)) {
  if (r < 0) throw std::invalid_argument("growth expression: negative exponential rate");
  if (r == 0 && !lex_nonnegative(t, s, u))
    throw std::invalid_argument(
        "growth expression: (t,s,u) below (0,0,0) is not a nondecreasing class");
}

double GrowthExpr::log_value_raw(std::int64_t n) const {
  if (n < 1) throw std::domain_error("growth value requested for n < 1");
  double ln = std::log(static_cast<double>(n));
  double l1 = std::log1p(ln);
  double l2 = std::log1p(l1);
  return static_cast<double>(t) * ln + static_cast<double>(s) * l1 +
         static_cast<double>(u) * l2 + static_cast<double>(r) * static_cast<double>(n);
}

double GrowthExpr::log_value(std::int64_t n) const {
  if (t >= 0 && s >= 0 && u >= 0) return log_value_raw(n);
  // Negative polylog components can dip at small n; take the running max.
  double best = log_value_raw(n);
  for (std::int64_t m = 1; m < n; ++m) best = std::max(best, log_value_raw(m));
  return best;
}

namespace {

// Exact composition where exponents allow it: integer powers of n and of the
// double-derived log factors. Falls back to a plain double evaluation.
Rat raw_value(const GrowthExpr& e, std::int64_t n) {
  bool nice = e.r == 0 && is_integer(e.t) && e.t >= 0 && is_integer(e.s) && e.s >= 0 &&
              is_integer(e.u) && e.u >= 0;
  if (!nice) return rat_from_double(std::exp(e.log_value_raw(n)));
  Rat v = Rat(ipow(BigInt(n), static_cast<std::uint64_t>(numerator(e.t))));
  if (e.s > 0) {
    Rat lf = rat_from_double(1.0 + std::log(static_cast<double>(n)));
    v *= rat_pow(lf, static_cast<std::uint64_t>(numerator(e.s)));
  }
  if (e.u > 0) {
    Rat llf = rat_from_double(1.0 + std::log(1.0 + std::log(static_cast<double>(n))));
    v *= rat_pow(llf, static_cast<std::uint64_t>(numerator(e.u)));
  }
  return v;
}

}  // namespace

Rat GrowthExpr::value(std::int64_t n) const {
  if (t >= 0 && s >= 0 && u >= 0) return raw_value(*this, n);
  Rat best = raw_value(*this, n);
  for (std::int64_t m = 1; m < n; ++m) {
    Rat v = raw_value(*this, m);
    if (v > best) best = v;
  }
  return best;
}

std::string GrowthExpr::label() const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const Rat& exp, const std::string& base) {
    if (exp == 0) return;
    if (any) os << "*";
    os << base;
    if (exp != 1) os << "^" << rat_to_string(exp);
    any = true;
  };
  term(t, "n");
  term(s, "log(n)");
  term(u, "loglog(n)");
  if (r != 0) {
    if (any) os << "*";
    os << "exp(" << rat_to_string(r) << "n)";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

int lex_compare(const GrowthExpr& a, const GrowthExpr& b) {
  auto cmp = [](const Rat& x, const Rat& y) { return x < y ? -1 : (x > y ? 1 : 0); };
  if (int c = cmp(a.r, b.r)) return c;
  if (int c = cmp(a.t, b.t)) return c;
  if (int c = cmp(a.s, b.s)) return c;
  return cmp(a.u, b.u);
}

TabulatedGrowth::TabulatedGrowth(std::vector<Rat> values) : values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) < kMinHorizon)
    throw std::invalid_argument("tabulated growth needs at least 16 values");
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0) throw std::invalid_argument("tabulated growth: non-positive value");
    if (i > 0 && values_[i] < values_[i - 1])
      throw std::invalid_argument("tabulated growth: values must be nondecreasing");
  }
}

const Rat& TabulatedGrowth::at(std::int64_t n) const {
  if (n < 1 || n > length()) throw std::out_of_range("tabulated growth index");
  return values_[static_cast<size_t>(n - 1)];
}

std::string Growth::label() const {
  if (symbolic()) return expr().label();
  std::ostringstream os;
  os << "tabulated[" << table().length() << "]";
  return os.str();
}

TabulatedGrowth tabulate(const GrowthExpr& e, std::int64_t horizon) {
  std::vector<Rat> vals;
  vals.reserve(static_cast<size_t>(horizon));
  Rat best = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    Rat v = e.value(n);
    if (v > best) best = v;
    vals.push_back(best);
  }
  return TabulatedGrowth(std::move(vals));
}

TabulatedGrowth tabulate(const Growth& g, std::int64_t horizon) {
  if (g.symbolic()) return tabulate(g.expr(), horizon);
  if (g.table().length() < horizon)
    throw std::invalid_argument("tabulated input shorter than requested horizon");
  std::vector<Rat> vals(g.table().values().begin(),
                        g.table().values().begin() + static_cast<size_t>(horizon));
  return TabulatedGrowth(std::move(vals));
}

GrowthExpr poly(const Rat& t) { return GrowthExpr(t, 0, 0, 0); }
GrowthExpr polylog(const Rat& t, const Rat& s) { return GrowthExpr(t, s, 0, 0); }
GrowthExpr exponential(const Rat& r) { return GrowthExpr(0, 0, 0, r); }

}  // namespace growthforge
