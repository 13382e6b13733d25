#ifndef SYLGEN_PERM_COSET_ACTION_HPP
#define SYLGEN_PERM_COSET_ACTION_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sylgen/perm/group.hpp"

namespace sylgen::perm
{

// Action of G on the right cosets P g. Coset ids are assigned in breadth
// first order from r_0 = identity along G's generators.
class CosetAction
{
public:
  CosetAction(PermGroup G, PermGroup P, Budgets const &budgets = default_budgets());

  PermGroup const &group() const
  { return _G; }
  PermGroup const &subgroup() const
  { return _P; }

  std::uint32_t degree() const
  { return static_cast<std::uint32_t>(_reps.size()); }
  std::vector<Perm> const &reps() const
  { return _reps; }
  // one permutation of the coset domain per generator of G
  std::vector<Perm> const &generator_images() const
  { return _gen_images; }
  // the generators of P acting on the coset domain
  std::vector<Perm> const &subgroup_images() const
  { return _sub_images; }

  // id of the coset P g; throws NotInGroup if g is not in G
  std::uint32_t coset_of(Perm const &g) const;
  // permutation of the coset domain induced by x in G
  Perm action_of(Perm const &x) const;

  // cosets fixed by every generator of P; their reps form N_G(P) modulo P
  std::vector<std::uint32_t> fixed_by_subgroup() const;

private:
  std::uint64_t signature(Perm const &g) const;
  std::int64_t lookup(Perm const &g, std::uint64_t sig) const;

  PermGroup _G, _P;
  std::vector<std::uint32_t> _orbit_id;
  std::vector<Perm> _reps, _reps_inv;
  std::unordered_multimap<std::uint64_t, std::uint32_t> _index;
  std::vector<Perm> _gen_images, _sub_images;
};

} // namespace sylgen::perm

#endif // SYLGEN_PERM_COSET_ACTION_HPP
