#ifndef SYLGEN_CLASSICAL_ISOTYPIC_HPP
#define SYLGEN_CLASSICAL_ISOTYPIC_HPP

#include <vector>

#include "sylgen/algebra/subspace.hpp"
#include "sylgen/classical/matrix_groups.hpp"

namespace sylgen::classical
{

using algebra::Subspace;

struct Summand
{
  Subspace space;
  // number of summands isomorphic to this one, itself included
  unsigned multiplicity = 1;
  // every nonzero vector was spun (true) or only a basis plus samples
  bool exhaustive_certificate = false;
};

struct IsotypicDecomposition
{
  std::vector<Summand> summands; // by decreasing dimension
  std::vector<std::size_t> dims() const;
};

// Decomposition of F^n under <gens> into irreducible summands. The group must
// have order prime to the characteristic (NotSemisimple otherwise).
IsotypicDecomposition isotypic_summands(MatrixGenSet const &gens, std::uint64_t element_cap = 1u << 16);

// dim Hom_G(U, W) for G-invariant subspaces U, W
std::size_t hom_dimension(std::vector<Matrix> const &gens, Subspace const &U, Subspace const &W);

bool is_irreducible(std::vector<Matrix> const &gens, Subspace const &U, bool *exhaustive = nullptr);

} // namespace sylgen::classical

#endif // SYLGEN_CLASSICAL_ISOTYPIC_HPP
