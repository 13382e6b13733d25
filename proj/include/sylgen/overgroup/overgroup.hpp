#ifndef SYLGEN_OVERGROUP_OVERGROUP_HPP
#define SYLGEN_OVERGROUP_OVERGROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylgen/perm/blocks.hpp"
#include "sylgen/perm/conjugacy.hpp"
#include "sylgen/perm/coset_action.hpp"

namespace sylgen::overgroup
{

using perm::Block;
using perm::BlockSystem;
using perm::CosetAction;
using perm::Perm;
using perm::PermGroup;

struct OvergroupBlock
{
  Block block;              // cosets of P making up H, contains coset 0
  BigInt order;             // |P| * |block|
  std::vector<Perm> gens;   // generators of H in G
  bool maximal = false;
  BlockSystem system;       // blocks of the coset domain, i.e. G/H
};

// Overgroups of P in G, from the blocks of G on G/P through coset 0.
class OvergroupLattice
{
public:
  OvergroupLattice(PermGroup const &G, PermGroup const &P, Budgets const &budgets = default_budgets());
  // rebuild from stored blocks (cache path)
  OvergroupLattice(PermGroup const &G, PermGroup const &P, std::vector<Block> const &blocks,
                   Budgets const &budgets = default_budgets());

  CosetAction const &action() const
  { return *_act; }
  // proper overgroups P <= H < G, by increasing order
  std::vector<OvergroupBlock> const &all() const
  { return _all; }
  std::vector<OvergroupBlock> maximal() const;

private:
  void build(std::vector<Block> blocks);

  std::shared_ptr<CosetAction> _act;
  std::vector<OvergroupBlock> _all;
};

std::vector<OvergroupBlock> maximal_overgroups(PermGroup const &G, PermGroup const &P,
                                               Budgets const &budgets = default_budgets());

// x_cosets is the action of x on G/P
Rational fpr(Perm const &x_cosets, OvergroupBlock const &H);
Rational fpr(CosetAction const &act, Perm const &x, OvergroupBlock const &H);
Rational sigma(CosetAction const &act, Perm const &x, std::vector<OvergroupBlock> const &M);

struct SigmaRow
{
  std::uint32_t class_index = 0;
  Perm rep;
  std::uint64_t size = 0;
  std::uint64_t order = 0;
  std::vector<Rational> fpr;  // one per maximal overgroup
  Rational sigma;
};

struct SigmaReport
{
  std::string group;
  BigInt order;
  BigInt p_order;
  std::vector<BigInt> overgroup_orders;
  std::vector<bool> overgroup_maximal;
  std::vector<SigmaRow> rows;
  Rational max_sigma;
  std::vector<std::uint32_t> attaining;  // classes with Σ = max_sigma
  Rational max_fpr;

  nlohmann::json to_json() const;
};

SigmaReport sigma_table(OvergroupLattice const &lattice, perm::ConjClassTable const &classes,
                        std::string const &group_id = "");
SigmaReport sigma_table(PermGroup const &G, PermGroup const &P, std::string const &group_id = "",
                        Budgets const &budgets = default_budgets());

struct CountLemmaRow
{
  std::vector<std::uint32_t> members;  // indices into the maximal overgroup list
  BigInt order;
  std::uint64_t observed = 0;          // n(H,P)
  BigInt normalizer_in_H;              // |N_H(P)|
  BigInt predicted;                    // |N_G(P):N_H(P)|
  bool match = false;
};

struct CountLemmaReport
{
  BigInt normalizer_order;             // |N_G(P)|
  BigInt index_in_G;                   // |G:N_G(P)|, the alternative reading
  std::vector<CountLemmaRow> rows;
  bool all_match = true;

  nlohmann::json to_json() const;
};

// Classes of maximal overgroups are the N_G(P)-orbits on their blocks:
// if H and H^g both contain P then P^(hg) = P for some h in H.
CountLemmaReport verify_count_lemma(OvergroupLattice const &lattice);

Rational parabolic_sigma_semisimple(unsigned n, std::uint64_t q, unsigned d_minus, unsigned d_plus);

} // namespace sylgen::overgroup

#endif // SYLGEN_OVERGROUP_OVERGROUP_HPP
