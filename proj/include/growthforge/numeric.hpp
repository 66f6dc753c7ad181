#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace growthforge {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Natural log of a positive rational, robust for values far outside double range.
double log_rational(const Rat& q);

// Exact conversion of a finite positive double to a rational.
Rat rat_from_double(double x);

// Parses "3", "-2/7" or a decimal like "2.5" into an exact rational.
Rat parse_rational(const std::string& text);

// Decimal string for integers; "p/q" form for non-integers.
std::string rat_to_string(const Rat& q);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor_rat(const Rat& q);
BigInt ceil_rat(const Rat& q);
BigInt round_half_up(const Rat& q);

BigInt ipow(BigInt base, std::uint64_t exp);
Rat rat_pow(Rat base, std::uint64_t exp);

// Largest y with y^k <= v (v >= 0, k >= 1).
BigInt iroot(const BigInt& v, unsigned k);

bool is_integer(const Rat& q);

}  // namespace growthforge
