#ifndef SYLGEN_AUDIT_INTERVAL_HPP
#define SYLGEN_AUDIT_INTERVAL_HPP

#include <string>

#include "sylgen/algebra/numbers.hpp"

namespace sylgen::audit
{

// Closed interval with exact rational endpoints. Arithmetic is exact; only
// the transcendental functions below round, and always outward.
struct Interval
{
  Rational lo, hi;

  Interval() = default;
  Interval(Rational v)
  : lo(v), hi(v)
  {}
  Interval(long v)
  : lo(v), hi(v)
  {}
  Interval(Rational l, Rational h);

  bool exact() const
  { return lo == hi; }
  std::string str() const;
};

Interval operator+(Interval const &a, Interval const &b);
Interval operator-(Interval const &a, Interval const &b);
Interval operator*(Interval const &a, Interval const &b);
Interval operator/(Interval const &a, Interval const &b);

// dyadic rounding to about `bits` significant bits
Rational round_down(Rational const &x, unsigned bits);
Rational round_up(Rational const &x, unsigned bits);

Rational log2_lower(Rational const &x, unsigned bits);
Rational log2_upper(Rational const &x, unsigned bits);

Interval log2(Interval const &x, unsigned bits);
Interval sqrt(Interval const &x, unsigned bits);
Interval exp2(Interval const &t, unsigned bits);
// x^k for integer k, exact
Interval ipow(Interval const &x, long k);
// q^(k/2) for an integer q > 0
Interval half_power(std::uint64_t q, long k, unsigned bits);
// x^y = 2^(y log2 x), x > 0
Interval pow(Interval const &x, Interval const &y, unsigned bits);

} // namespace sylgen::audit

#endif // SYLGEN_AUDIT_INTERVAL_HPP
