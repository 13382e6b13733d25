#ifndef SYLGEN_SYLOW_SYLOW_HPP
#define SYLGEN_SYLOW_SYLOW_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "sylgen/budget.hpp"
#include "sylgen/classical/spec.hpp"
#include "sylgen/perm/group.hpp"

namespace sylgen::sylow
{

using perm::PermGroup;

struct SylowData
{
  std::uint64_t p = 2;
  PermGroup P;
};

// Normalizer ascent from the p-part of a random element: Q grows by a
// p-element of N_G(Q) outside Q until |Q| is the p-part of |G|.
SylowData sylow_subgroup(PermGroup const &G, std::uint64_t p, std::uint64_t seed,
                         Budgets const &budgets = default_budgets());

// Sylow p-subgroup of the natural A_n, built directly from base-p digits.
PermGroup alternating_sylow(unsigned n, std::uint64_t p);

// g with P1^g = P2, found from a coset of P1 fixed by P2; nullopt when P2
// has no fixed coset (P1, P2 not conjugate Sylow subgroups)
std::optional<perm::Perm> sylow_conjugator(PermGroup const &G, PermGroup const &P1, PermGroup const &P2,
                                           Budgets const &budgets = default_budgets());

struct NormalizerReport
{
  BigInt normalizer_order;
  BigInt index;                       // |N_G(P):P| from fixed cosets
  std::optional<BigInt> orbit_index;  // same, from the conjugation orbit stabilizer
  std::optional<BigInt> expected;     // the theorem's prediction, when covered
  bool match = true;                  // all available values agree
};

NormalizerReport normalizer_of_sylow2(PermGroup const &G, PermGroup const &P,
                                      bool cross_check = true,
                                      Budgets const &budgets = default_budgets());

// Predicted |N_G(P):P| for a Sylow 2-subgroup; Uncovered outside the
// covered families.
BigInt expected_normalizer_index(classical::GroupSpec const &spec);

// (t(n), n_2') : nonzero binary digits and the largest odd divisor
std::pair<unsigned, std::uint64_t> binary_digits_and_oddpart(std::uint64_t n);

} // namespace sylgen::sylow

#endif // SYLGEN_SYLOW_SYLOW_HPP
