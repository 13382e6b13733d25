#ifndef SYLGEN_GENERATION_GENERATION_HPP
#define SYLGEN_GENERATION_GENERATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylgen/perm/conjugacy.hpp"
#include "sylgen/perm/group.hpp"

namespace sylgen::generation
{

using perm::Perm;
using perm::PermGroup;

struct Witness
{
  std::vector<std::uint32_t> coordinates;  // in G's BSGS
  Perm g;
};

struct MCReport
{
  std::uint32_t class_index = 0;
  Perm x;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::optional<Witness> witness;

  Rational q_hat() const;
  nlohmann::json to_json() const;
};

// true iff <P, x^g> = G, by BSGS order
bool generates_with(PermGroup const &G, PermGroup const &P, Perm const &y);

MCReport mc_generation(PermGroup const &G, PermGroup const &P, Perm const &x, std::uint64_t samples,
                       std::uint64_t seed, Budgets const &budgets = default_budgets());

// re-check a stored witness against G, P and x
bool verify_witness(PermGroup const &G, PermGroup const &P, Perm const &x, nlohmann::json const &report);

struct AllClassesReport
{
  std::vector<MCReport> reports;  // one per nontrivial class
  bool all_witnessed = true;

  nlohmann::json to_json() const;
};

// class c uses seed Rng::derive(seed, c)
AllClassesReport exists_generating_conjugate_all_classes(PermGroup const &G, PermGroup const &P,
                                                         perm::ConjClassTable const &classes,
                                                         std::uint64_t samples_per_class, std::uint64_t seed,
                                                         Budgets const &budgets = default_budgets());

struct ObstructionReport
{
  std::string scenario;
  std::map<std::string, std::int64_t> data;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t confirmed = 0;

  nlohmann::json to_json() const;
};

// x of the given cycle type (lengths > 1) in A_n, P a Sylow p-subgroup;
// InequalityFails unless orb(x) > n - orb(P)
ObstructionReport an_obstruction(unsigned n, std::uint64_t p, std::vector<unsigned> const &cycle_type,
                                 std::uint64_t samples, std::uint64_t seed);

// SL_5(2), P = <y> Sylow 7, x a transvection
ObstructionReport l52_obstruction(std::uint64_t samples, std::uint64_t seed,
                                  Budgets const &budgets = default_budgets());

struct SubsetVerdict
{
  std::vector<unsigned> summands;  // indices into dims
  bool invariant = false;
};

struct IrreducibilityCertificate
{
  BigInt sylow_order;
  BigInt expected_order;           // 2-part of |SL_7(3)|
  std::vector<std::size_t> dims;
  std::vector<SubsetVerdict> verdicts;
  bool irreducible = false;

  nlohmann::json to_json() const;
};

// P from sl_sylow2_matrices(7), y the all-ones transvection, over GF(3)
IrreducibilityCertificate irreducible_transvection_check();

} // namespace sylgen::generation

#endif // SYLGEN_GENERATION_GENERATION_HPP
