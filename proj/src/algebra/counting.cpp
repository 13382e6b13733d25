#include "sylgen/algebra/counting.hpp"

#include "sylgen/algebra/subspace.hpp"
#include "sylgen/error.hpp"

namespace sylgen::algebra
{

BigInt gauss_binom(unsigned n, unsigned m, std::uint64_t q)
{
  if (m > n)
    return 0;

  BigInt bq = from_u64(q), num = 1, den = 1;
  for (unsigned i = 0; i < m; ++i) {
    num *= bigpow(bq, n - i) - 1;
    den *= bigpow(bq, i + 1) - 1;
  }
  return num / den;
}

BigInt invariant_mspace_count(unsigned d_minus, unsigned d_plus, unsigned m, std::uint64_t q)
{
  BigInt total = 0;
  for (unsigned k = 0; k <= m; ++k) {
    if (k > d_minus || m - k > d_plus)
      continue;
    total += gauss_binom(d_minus, k, q) * gauss_binom(d_plus, m - k, q);
  }
  return total;
}

BigInt fixed_one_spaces(Matrix const &x)
{
  Field const &F = *x.field();
  if (x.det().is_zero())
    throw Error(ErrorKind::Singular, "fixed_one_spaces needs an invertible matrix");

  BigInt bq = from_u64(F.q()), total = 0;
  for (auto lambda : F.elements()) {
    if (lambda.is_zero())
      continue;
    auto d = fixed_space(x, lambda).dim();
    total += (bigpow(bq, static_cast<unsigned>(d)) - 1) / (bq - 1);
  }
  return total;
}

} // namespace sylgen::algebra
