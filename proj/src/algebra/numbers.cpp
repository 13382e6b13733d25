#include "sylgen/algebra/numbers.hpp"

#include "sylgen/error.hpp"

namespace sylgen
{

std::string to_string(Rational const &r)
{ return r.get_num().get_str() + "/" + r.get_den().get_str(); }

std::string to_string(BigInt const &n)
{ return n.get_str(); }

Rational parse_rational(std::string const &text)
{
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_bigint(text));

  return make_rational(parse_bigint(text.substr(0, slash)),
                       parse_bigint(text.substr(slash + 1)));
}

BigInt parse_bigint(std::string const &text)
{
  BigInt n;
  if (text.empty() || n.set_str(text, 10) != 0)
    throw Error(ErrorKind::ParseError, "not an integer: '" + text + "'");
  return n;
}

Rational make_rational(BigInt const &num, BigInt const &den)
{
  if (den == 0)
    throw Error(ErrorKind::Singular, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

PrimePower prime_power_decompose(std::uint64_t q)
{
  if (q < 2)
    return {};

  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0)
    return {q, 1};

  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1)
    return {};
  return {p, f};
}

bool is_prime_power(std::uint64_t q)
{ return prime_power_decompose(q).f > 0; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

BigInt p_part(BigInt const &n, std::uint64_t p)
{
  BigInt part = 1;
  BigInt rest = n;
  BigInt bp = from_u64(p);
  while (rest != 0 && rest % bp == 0) {
    rest /= bp;
    part *= bp;
  }
  return part;
}

unsigned p_adic_valuation(BigInt n, std::uint64_t p)
{
  unsigned v = 0;
  BigInt bp = from_u64(p);
  while (n != 0 && n % bp == 0) {
    n /= bp;
    ++v;
  }
  return v;
}

BigInt odd_part(BigInt const &n)
{ return n / p_part(n, 2); }

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

BigInt bigpow(BigInt const &base, unsigned exp)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool fits_u64(BigInt const &n)
{ return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t as_u64(BigInt const &n)
{
  if (!fits_u64(n))
    throw Error(ErrorKind::SizeCap, "integer exceeds 64 bits: " + n.get_str());
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

BigInt from_u64(std::uint64_t n)
{
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return r;
}

} // namespace sylgen
