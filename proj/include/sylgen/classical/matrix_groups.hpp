#ifndef SYLGEN_CLASSICAL_MATRIX_GROUPS_HPP
#define SYLGEN_CLASSICAL_MATRIX_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylgen/algebra/matrix.hpp"
#include "sylgen/algebra/numbers.hpp"

namespace sylgen::classical
{

using algebra::FieldPtr;
using algebra::Matrix;
using algebra::Vector;

enum class FormKind
{
  None,
  Symplectic,
  Unitary,
};

struct MatrixGenSet
{
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  FormKind form = FormKind::None;
  std::optional<Matrix> gram;
  // unitary case: the involution x -> x^sigma_power
  std::uint64_t sigma_power = 1;

  // g^T J g^sigma == J
  bool preserves_form(Matrix const &g) const;
};

// SL_n(q): root elements I + w^k E_12 (k < f) and a signed n-cycle.
MatrixGenSet sl_generators(unsigned n, std::uint64_t q);
// Sp_n(q), n even: root elements for the simple roots and their negatives,
// Gram matrix [[0, I], [-I, 0]].
MatrixGenSet sp_generators(unsigned n, std::uint64_t q);
// SU_n(q) over GF(q^2), identity Hermitian form: SU_2 blocks on the first
// coordinate pair and a signed n-cycle.
MatrixGenSet su_generators(unsigned n, std::uint64_t q);

FieldPtr field_of_size(std::uint64_t q);

// special_element kinds
Matrix neg_block(FieldPtr const &F, unsigned n, unsigned k, bool sl_target = true);
Matrix jordan(FieldPtr const &F, std::vector<unsigned> const &partition);
Matrix diag(FieldPtr const &F, std::vector<long> const &entries, bool sl_target = false);

// I + N with N_{rj} = alpha_j, alpha_1 = 1, every alpha_j in {1, 2} and
// 1 + alpha_2 + ... + alpha_n = 0 over GF(3)
Matrix transvection_allones(unsigned n);
std::vector<long> transvection_alphas(unsigned n);

// Sylow 2-subgroup of SL_n(3) from wreath towers over the binary digits of n.
MatrixGenSet sl_sylow2_matrices(unsigned n);

// all elements of <gens>; BudgetExceeded beyond cap
std::vector<Matrix> enumerate_matrix_group(std::vector<Matrix> const &gens, std::uint64_t cap);

} // namespace sylgen::classical

#endif // SYLGEN_CLASSICAL_MATRIX_GROUPS_HPP
