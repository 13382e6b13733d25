#include "sylgen/audit/interval.hpp"

#include <algorithm>

#include "sylgen/error.hpp"

namespace sylgen::audit
{

Interval::Interval(Rational l, Rational h)
: lo(std::move(l)), hi(std::move(h))
{
  if (lo > hi)
    throw Error(ErrorKind::RangeViolation, "interval endpoints out of order");
}

std::string Interval::str() const
{
  return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

Interval operator+(Interval const &a, Interval const &b)
{
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(Interval const &a, Interval const &b)
{
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(Interval const &a, Interval const &b)
{
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(Interval const &a, Interval const &b)
{
  if (b.lo <= 0 && b.hi >= 0)
    throw Error(ErrorKind::RangeViolation, "division by an interval containing 0");
  Rational l = 1 / b.hi, h = 1 / b.lo;
  return a * Interval(l, h);
}

namespace
{

// floor(log2 x) for x > 0
long floor_log2(Rational const &x)
{
  mpz_class n = x.get_num(), d = x.get_den();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // now 2^(e-1) < x < 2^(e+1)
  Rational p = e >= 0 ? Rational(mpz_class(1) << e) : Rational(1, mpz_class(1) << -e);
  if (x < p)
    --e;
  return e;
}

Rational pow2(long e)
{
  return e >= 0 ? Rational(mpz_class(1) << e) : Rational(mpz_class(1), mpz_class(1) << -e);
}

Rational scaled_round(Rational const &x, unsigned bits, bool up)
{
  if (x == 0)
    return x;
  if (x < 0)
    return -scaled_round(-x, bits, !up);
  long s = static_cast<long>(bits) - floor_log2(x);
  Rational y = x * pow2(s);
  mpz_class f = y.get_num() / y.get_den(); // floor for positive
  if (up && Rational(f) != y)
    f += 1;
  return Rational(f) * pow2(-s);
}

} // namespace

Rational round_down(Rational const &x, unsigned bits)
{
  return scaled_round(x, bits, false);
}

Rational round_up(Rational const &x, unsigned bits)
{
  return scaled_round(x, bits, true);
}

namespace
{

Rational log2_bound(Rational const &x, unsigned bits, bool up)
{
  if (x <= 0)
    throw Error(ErrorKind::RangeViolation, "log2 of a nonpositive value");
  long k = floor_log2(x);
  Rational y = x * pow2(-k); // in [1, 2)
  Rational result = k;
  if (y == 1)
    return result;
  Rational bit = 1;
  for (unsigned i = 0; i < bits; ++i) {
    bit /= 2;
    y = up ? round_up(y * y, bits + 8) : round_down(y * y, bits + 8);
    if (y >= 2) {
      y /= 2;
      result += bit;
    }
  }
  if (up)
    result += bit;
  return result;
}

// sqrt bound for r >= 0
Rational sqrt_bound(Rational const &r, unsigned bits, bool up)
{
  if (r < 0)
    throw Error(ErrorKind::RangeViolation, "sqrt of a negative value");
  if (r == 0)
    return r;
  long s = static_cast<long>(bits) + 2 - floor_log2(r) / 2;
  Rational scaled = r * pow2(2 * s);
  mpz_class f = scaled.get_num() / scaled.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), f.get_mpz_t());
  if (up) {
    Rational cand = Rational(root) * pow2(-s);
    if (cand * cand < r)
      root += 1;
  }
  return Rational(root) * pow2(-s);
}

} // namespace

Rational log2_lower(Rational const &x, unsigned bits)
{
  return log2_bound(x, bits, false);
}

Rational log2_upper(Rational const &x, unsigned bits)
{
  return log2_bound(x, bits, true);
}

Interval log2(Interval const &x, unsigned bits)
{
  return {log2_lower(x.lo, bits), log2_upper(x.hi, bits)};
}

Interval sqrt(Interval const &x, unsigned bits)
{
  return {sqrt_bound(x.lo, bits, false), sqrt_bound(x.hi, bits, true)};
}

namespace
{

Rational exp2_bound(Rational const &t, unsigned bits, bool up)
{
  mpz_class k = t.get_num() / t.get_den();
  if (Rational(k) > t)
    k -= 1; // floor for negative t
  Rational f = t - Rational(k);
  // 2^f with f = sum b_i 2^-i, c_i = 2^(2^-i)
  Rational c = 2, result = 1, rem = f;
  for (unsigned i = 1; i <= bits; ++i) {
    c = sqrt_bound(c, bits + 8, up);
    Rational half = pow2(-static_cast<long>(i));
    if (rem >= half) {
      rem -= half;
      result = up ? round_up(result * c, bits + 8) : round_down(result * c, bits + 8);
    }
  }
  if (up && rem > 0)
    result = round_up(result * c, bits + 8);
  return result * pow2(k.get_si());
}

} // namespace

Interval exp2(Interval const &t, unsigned bits)
{
  return {exp2_bound(t.lo, bits, false), exp2_bound(t.hi, bits, true)};
}

Interval ipow(Interval const &x, long k)
{
  if (k < 0)
    return Interval(1) / ipow(x, -k);
  Interval r(1);
  for (long i = 0; i < k; ++i)
    r = r * x;
  if (k % 2 == 0 && x.lo < 0 && x.hi > 0)
    r.lo = 0;
  return r;
}

Interval half_power(std::uint64_t q, long k, unsigned bits)
{
  Interval base(Rational(from_u64(q)));
  if (k % 2 == 0)
    return ipow(base, k / 2);
  // q^(k/2) = q^((k-1)/2) * sqrt(q)
  return ipow(base, (k - 1) / 2) * sqrt(base, bits);
}

Interval pow(Interval const &x, Interval const &y, unsigned bits)
{
  return exp2(y * log2(x, bits), bits);
}

} // namespace sylgen::audit
