#include "growthforge/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

namespace growthforge {

using BinFloat = boost::multiprecision::cpp_bin_float_50;

double log_rational(const Rat& q) {
  if (q <= 0) throw std::domain_error("log_rational: non-positive value");
  BinFloat f(q);
  return static_cast<double>(log(f));
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rat_from_double: non-finite value");
  return Rat(x);
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad rational literal '" + text + "'");
  return Rat(BigInt(digits), ipow(BigInt(10), frac_len));
}

std::string rat_to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

BigInt ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

BigInt round_half_up(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

Rat rat_pow(Rat base, std::uint64_t exp) {
  Rat result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

BigInt iroot(const BigInt& v, unsigned k) {
  if (v < 0) throw std::domain_error("iroot of negative value");
  if (v == 0 || k == 1) return v;
  BigInt lo = 0, hi = 1;
  while (ipow(hi, k) <= v) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, k) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

}  // namespace growthforge
