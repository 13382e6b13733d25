#ifndef SYLGEN_PERM_CONJUGACY_HPP
#define SYLGEN_PERM_CONJUGACY_HPP

#include <cstdint>
#include <vector>

#include "sylgen/perm/group.hpp"

namespace sylgen::perm
{

struct ConjClass
{
  Perm rep;
  std::uint64_t rep_rank = 0;
  std::uint64_t size = 0;
  std::uint64_t order = 0;
};

// Conjugacy classes by orbit enumeration over a class-id array indexed by
// element rank. Classes are numbered by the least rank they contain, so the
// identity is class 0.
class ConjClassTable
{
public:
  static ConjClassTable compute(PermGroup const &G, Budgets const &budgets = default_budgets());
  // rebuild from stored class-of-rank data (cache path)
  static ConjClassTable from_parts(PermGroup const &G, std::vector<std::uint32_t> class_of_rank);

  std::vector<ConjClass> const &classes() const
  { return _classes; }
  std::size_t size() const
  { return _classes.size(); }

  std::uint32_t class_of(Perm const &x) const;
  std::uint32_t class_of_rank(std::uint64_t r) const
  { return _class_of_rank[r]; }
  std::vector<std::uint32_t> const &class_of_rank_data() const
  { return _class_of_rank; }

  BigInt centralizer_order(std::uint32_t c) const
  { return _order / static_cast<unsigned long>(_classes[c].size); }
  std::uint32_t power_class(std::uint32_t c, std::int64_t m) const;

private:

  PermGroup _G;
  BigInt _order;
  std::vector<std::uint32_t> _class_of_rank;
  std::vector<ConjClass> _classes;
};

struct ConjOrbitResult
{
  std::uint64_t orbit_size = 0;
  PermGroup normalizer;
};

// Orbit of Q under conjugation by G and its stabilizer N_G(Q), built from
// Schreier generators until |G| = orbit * |N|.
ConjOrbitResult conj_orbit_stabilizer(PermGroup const &G, PermGroup const &Q,
                                      Budgets const &budgets = default_budgets());

} // namespace sylgen::perm

#endif // SYLGEN_PERM_CONJUGACY_HPP
