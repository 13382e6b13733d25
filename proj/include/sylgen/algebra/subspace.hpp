#ifndef SYLGEN_ALGEBRA_SUBSPACE_HPP
#define SYLGEN_ALGEBRA_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "sylgen/algebra/matrix.hpp"

namespace sylgen::algebra
{

// Subspace of F^n stored as a reduced row echelon basis, so two subspaces are
// equal iff their row lists are equal.
class Subspace
{
public:
  Subspace(FieldPtr field, std::size_t ambient);

  static Subspace span(FieldPtr field, std::size_t ambient, std::vector<Vector> const &vectors);
  static Subspace full(FieldPtr field, std::size_t ambient);
  // kernel of m as a map on column vectors
  static Subspace kernel(Matrix const &m);

  std::size_t ambient() const
  { return _ambient; }
  std::size_t dim() const
  { return _rows.size(); }
  std::vector<Vector> const &basis() const
  { return _rows; }
  FieldPtr const &field() const
  { return _field; }

  bool contains(Vector const &v) const;
  bool contains(Subspace const &other) const;
  Subspace sum(Subspace const &other) const;
  Subspace intersect(Subspace const &other) const;
  Subspace image(Matrix const &m) const;
  bool invariant_under(Matrix const &m) const
  { return contains(image(m)); }

  // smallest subspace containing v and invariant under gens
  static Subspace spin(std::vector<Matrix> const &gens, Vector const &v);
  static Subspace spin(std::vector<Matrix> const &gens, Subspace const &start);

  // All vectors of the subspace (q^dim of them); callers cap the size.
  std::vector<Vector> all_vectors() const;

  bool operator==(Subspace const &other) const
  { return _ambient == other._ambient && _rows == other._rows; }

private:
  void reduce();

  FieldPtr _field;
  std::size_t _ambient;
  std::vector<Vector> _rows;
};

// ker(x - lambda I), canonical echelon form.
Subspace fixed_space(Matrix const &x, FieldElem lambda);

} // namespace sylgen::algebra

#endif // SYLGEN_ALGEBRA_SUBSPACE_HPP
