#ifndef SYLGEN_ALGEBRA_MATRIX_HPP
#define SYLGEN_ALGEBRA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "sylgen/algebra/field.hpp"

namespace sylgen::algebra
{

using Vector = std::vector<FieldElem>;

// Dense square matrix over a finite field, acting on column vectors.
class Matrix
{
public:
  static constexpr std::size_t dim_cap = 32;

  Matrix(FieldPtr field, std::size_t n);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix diagonal(FieldPtr field, Vector const &diag);
  // rows[i][j] given as integers reduced into the prime field
  static Matrix from_ints(FieldPtr field, std::vector<std::vector<long>> const &rows);
  static Matrix block_diagonal(std::vector<Matrix> const &blocks);

  std::size_t n() const
  { return _n; }
  FieldPtr const &field() const
  { return _field; }

  FieldElem operator()(std::size_t i, std::size_t j) const
  { return _a[i * _n + j]; }
  FieldElem &operator()(std::size_t i, std::size_t j)
  { return _a[i * _n + j]; }

  std::vector<FieldElem> const &entries() const
  { return _a; }

  Matrix operator*(Matrix const &other) const;
  Matrix operator+(Matrix const &other) const;
  Matrix operator-(Matrix const &other) const;
  bool operator==(Matrix const &other) const
  { return _n == other._n && _a == other._a; }

  Vector apply(Vector const &v) const;

  Matrix inverse() const;
  FieldElem det() const;
  std::size_t rank() const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;
  // entrywise x -> x^(p^k)
  Matrix frobenius(unsigned k) const;
  // entrywise x -> x^e (used for the unitary conjugation x -> x^q0)
  Matrix entry_power(std::uint64_t e) const;

  bool is_identity() const;
  // Multiplicative order; throws BudgetExceeded beyond limit.
  std::uint64_t order(std::uint64_t limit = 1u << 24) const;

private:
  FieldPtr _field;
  std::size_t _n;
  std::vector<FieldElem> _a;
};

// Row echelon helpers shared with Subspace.
std::size_t rank_of_rows(FieldPtr const &field, std::vector<Vector> rows);

} // namespace sylgen::algebra

#endif // SYLGEN_ALGEBRA_MATRIX_HPP
