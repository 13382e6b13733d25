#ifndef SYLGEN_PERM_BLOCKS_HPP
#define SYLGEN_PERM_BLOCKS_HPP

#include <cstdint>
#include <vector>

#include "sylgen/budget.hpp"
#include "sylgen/perm/perm.hpp"

namespace sylgen::perm
{

using Block = std::vector<Point>; // sorted

// Block system generated by one block under a transitive group.
struct BlockSystem
{
  std::vector<Block> blocks;            // blocks[0] is the seed block
  std::vector<std::uint32_t> block_of;  // point -> block index

  std::size_t block_size() const
  { return blocks.empty() ? 0 : blocks[0].size(); }

  static BlockSystem from_block(std::vector<Perm> const &gens, std::size_t degree, Block const &b);

  // permutation induced on the blocks
  Perm induced(Perm const &x) const;
  std::size_t fixed_blocks(Perm const &x) const;
};

// Minimal block containing a and b; returns the whole domain when the
// class of a outgrows half the degree.
Block minimal_block(std::vector<Perm> const &gens, std::size_t degree, Point a, Point b);

// Every block through point 0 of the transitive group <gens>, including {0}
// and the whole domain, sorted by size then lexicographically. stab_gens
// generate (a subgroup of) the stabilizer of 0 and only serve to thin the
// seed points. Throws BudgetExceeded beyond budgets.overgroup_cap blocks.
std::vector<Block> blocks_through_zero(std::vector<Perm> const &gens,
                                       std::vector<Perm> const &stab_gens,
                                       std::size_t degree,
                                       Budgets const &budgets = default_budgets());

} // namespace sylgen::perm

#endif // SYLGEN_PERM_BLOCKS_HPP
