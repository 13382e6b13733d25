#ifndef SYLGEN_ALGEBRA_COUNTING_HPP
#define SYLGEN_ALGEBRA_COUNTING_HPP

#include <cstdint>

#include "sylgen/algebra/matrix.hpp"
#include "sylgen/algebra/numbers.hpp"

namespace sylgen::algebra
{

// Number of m-dimensional subspaces of GF(q)^n.
BigInt gauss_binom(unsigned n, unsigned m, std::uint64_t q);

// Number of m-spaces invariant under a semisimple element with exactly two
// eigenspaces, of dimensions d_minus and d_plus.
BigInt invariant_mspace_count(unsigned d_minus, unsigned d_plus, unsigned m, std::uint64_t q);

// Number of 1-spaces fixed by the invertible matrix x.
BigInt fixed_one_spaces(Matrix const &x);

} // namespace sylgen::algebra

#endif // SYLGEN_ALGEBRA_COUNTING_HPP
