#ifndef SYLGEN_BUDGET_HPP
#define SYLGEN_BUDGET_HPP

#include <cstdint>

namespace sylgen
{

// Resource caps shared by all modules. The CLI reads overrides from a
// key = value config file; the field names double as the config keys.
struct Budgets
{
  // maximum permutation degree accepted by group_from_generators
  std::uint64_t degree_cap = 100000;
  // maximum coset-action degree |G:P|
  std::uint64_t coset_degree_cap = 100000;
  // exact conjugacy class enumeration: |G| and degree caps
  std::uint64_t class_order_cap = 10000000;
  std::uint64_t class_degree_cap = 1024;
  // subgroup conjugation orbits
  std::uint64_t orbit_cap = 1000000;
  std::uint64_t subgroup_elements_cap = 8192;
  // number of overgroups returned by the block lattice search
  std::uint64_t overgroup_cap = 10000;
  // Monte Carlo samples per class
  std::uint64_t samples = 200;
  // uniform draws per Sylow ascent level
  std::uint64_t sylow_samples = 512;
  // total transversal storage (points) for one BSGS
  std::uint64_t transversal_cap = std::uint64_t(1) << 26;
  // projective point tables (q^n)
  std::uint64_t projective_cap = std::uint64_t(1) << 24;
};

Budgets const &default_budgets();

} // namespace sylgen

#endif // SYLGEN_BUDGET_HPP
