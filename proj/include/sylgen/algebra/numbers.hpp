#ifndef SYLGEN_ALGEBRA_NUMBERS_HPP
#define SYLGEN_ALGEBRA_NUMBERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sylgen
{

using BigInt = mpz_class;
using Rational = mpq_class;

// Rationals are always printed as "num/den", integers included ("1/1").
std::string to_string(Rational const &r);
std::string to_string(BigInt const &n);

Rational parse_rational(std::string const &text);
BigInt parse_bigint(std::string const &text);

Rational make_rational(BigInt const &num, BigInt const &den);

bool is_prime(std::uint64_t n);

// (p, f) with q = p^f, or f == 0 if q is not a prime power.
struct PrimePower
{
  std::uint64_t p = 0;
  unsigned f = 0;
};
PrimePower prime_power_decompose(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Largest power of p dividing n, and the exponent.
BigInt p_part(BigInt const &n, std::uint64_t p);
unsigned p_adic_valuation(BigInt n, std::uint64_t p);
BigInt odd_part(BigInt const &n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
BigInt bigpow(BigInt const &base, unsigned exp);

bool fits_u64(BigInt const &n);
std::uint64_t as_u64(BigInt const &n);
BigInt from_u64(std::uint64_t n);

} // namespace sylgen

#endif // SYLGEN_ALGEBRA_NUMBERS_HPP
