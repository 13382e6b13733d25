#ifndef SYLGEN_CLASSICAL_ACTIONS_HPP
#define SYLGEN_CLASSICAL_ACTIONS_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sylgen/budget.hpp"
#include "sylgen/classical/matrix_groups.hpp"
#include "sylgen/classical/spec.hpp"
#include "sylgen/perm/group.hpp"

namespace sylgen::classical
{

// Permutation action of matrices on row vectors v -> v g, either on
// normalized 1-spaces (projective) or on a finite set of vectors.
class VectorDomain
{
public:
  // all 1-spaces of F^n, each stored with first nonzero coordinate 1
  static VectorDomain projective(FieldPtr field, std::size_t n, Budgets const &budgets = default_budgets());
  // union of the orbits of the start vectors under gens
  static VectorDomain orbits(std::vector<Matrix> const &gens, std::vector<Vector> const &start,
                             Budgets const &budgets = default_budgets());

  std::size_t size() const
  { return _points.size(); }
  std::vector<Vector> const &points() const
  { return _points; }
  bool is_projective() const
  { return _projective; }

  // index of v (normalized first when projective); throws NotInGroup if absent
  std::uint32_t index_of(Vector const &v) const;
  perm::Perm perm_of(Matrix const &g) const;
  // row vector v g
  Vector act(Vector const &v, Matrix const &g) const;

private:
  std::uint64_t code(Vector const &v) const;
  Vector normalize(Vector v) const;

  FieldPtr _field;
  std::size_t _n = 0;
  bool _projective = false;
  std::vector<Vector> _points;
  std::vector<std::uint32_t> _index; // dense code table (projective)
  std::unordered_map<std::uint64_t, std::uint32_t> _sparse; // orbit domains
};

struct ConstructedGroup
{
  GroupSpec spec;
  std::optional<MatrixGenSet> matrices;
  std::optional<VectorDomain> domain;
  perm::PermGroup group;
};

// Generators for the spec, as a permutation group whose order is certified
// against the order formula. Matrix families act projectively with the
// matrix group order recovered as projective order times scalars.
ConstructedGroup construct_group(GroupSpec const &spec, Budgets const &budgets = default_budgets());

// projective image of a matrix generating set, order-certified against
// expected_projective_order when one is given
perm::PermGroup projective_action(MatrixGenSet const &gens, VectorDomain const &dom,
                                  std::optional<BigInt> expected_projective_order = std::nullopt,
                                  Budgets const &budgets = default_budgets());

perm::PermGroup alternating_group(unsigned n);

} // namespace sylgen::classical

#endif // SYLGEN_CLASSICAL_ACTIONS_HPP
