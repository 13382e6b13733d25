#ifndef SYLGEN_PERM_GROUP_HPP
#define SYLGEN_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sylgen/algebra/numbers.hpp"
#include "sylgen/budget.hpp"
#include "sylgen/perm/perm.hpp"
#include "sylgen/rng.hpp"

namespace sylgen::perm
{

struct BuildOptions
{
  // Known upper bound on the order (e.g. the order of an overgroup). Once
  // the partial chain reaches it, the chain is complete and work stops.
  std::optional<BigInt> order_bound;
  // base points to use first, in order
  std::vector<Point> base_prefix;
  Budgets budgets = default_budgets();
};

// Permutation group with a base and strong generating set built by
// deterministic Schreier-Sims. Levels store explicit transversals.
class PermGroup
{
public:
  struct Level
  {
    Point base;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Perm> u;
    std::vector<Perm> uinv;
  };

  // base point and strong generators of one level, enough to rebuild it
  struct StoredLevel
  {
    Point base;
    std::vector<Perm> gens;
  };

  PermGroup() = default;
  static PermGroup from_generators(std::vector<Perm> gens, std::size_t degree,
                                   BuildOptions const &opts = {});
  static PermGroup trivial(std::size_t degree);
  // rebuild from a stored chain without sifting; transversals come out
  // identical to the original's. Throws ChecksumMismatch on inconsistent data.
  static PermGroup from_chain(std::vector<Perm> gens, std::size_t degree, std::vector<StoredLevel> const &chain,
                              Budgets const &budgets = default_budgets());
  std::vector<StoredLevel> chain() const;

  std::size_t degree() const
  { return _degree; }
  std::vector<Perm> const &generators() const
  { return _gens; }
  BigInt const &order() const
  { return _order; }
  std::vector<Point> base() const;
  std::vector<Level> const &levels() const
  { return _levels; }
  std::vector<std::uint64_t> orbit_sizes() const;

  bool contains(Perm const &x) const;
  Perm random(Rng &rng) const;

  // transversal coordinates, one per level; throws NotInGroup
  std::vector<std::uint32_t> coordinates(Perm const &x) const;
  Perm from_coordinates(std::vector<std::uint32_t> const &c) const;

  // mixed-radix index of x, in [0, |G|); group order must fit in 64 bits
  std::uint64_t rank(Perm const &x) const;
  Perm unrank(std::uint64_t r) const;

  // every element in rank order; throws BudgetExceeded beyond cap
  std::vector<Perm> elements(std::uint64_t cap) const;

  Perm identity() const
  { return Perm(_degree); }

  bool is_subgroup_of(PermGroup const &g) const;

private:
  std::size_t _degree = 0;
  std::vector<Perm> _gens;
  std::vector<Level> _levels;
  BigInt _order = 1;
  std::vector<std::uint64_t> _radix;
};

} // namespace sylgen::perm

#endif // SYLGEN_PERM_GROUP_HPP
