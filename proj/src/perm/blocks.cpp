#include "sylgen/perm/blocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "sylgen/error.hpp"

namespace sylgen::perm
{

BlockSystem BlockSystem::from_block(std::vector<Perm> const &gens, std::size_t degree, Block const &b)
{
  BlockSystem sys;
  sys.block_of.assign(degree, UINT32_MAX);
  sys.blocks.push_back(b);
  for (Point p : b)
    sys.block_of[p] = 0;

  for (std::size_t k = 0; k < sys.blocks.size(); ++k) {
    for (auto const &g : gens) {
      Point first = g[sys.blocks[k][0]];
      if (sys.block_of[first] != UINT32_MAX)
        continue;
      Block img;
      img.reserve(b.size());
      auto id = static_cast<std::uint32_t>(sys.blocks.size());
      for (Point p : sys.blocks[k]) {
        Point y = g[p];
        if (sys.block_of[y] != UINT32_MAX)
          throw Error(ErrorKind::ConstructionFailed, "point set is not a block");
        sys.block_of[y] = id;
        img.push_back(y);
      }
      std::sort(img.begin(), img.end());
      sys.blocks.push_back(std::move(img));
    }
  }
  if (sys.blocks.size() * b.size() != degree)
    throw Error(ErrorKind::ConstructionFailed, "block translates do not cover the domain");
  return sys;
}

Perm BlockSystem::induced(Perm const &x) const
{
  std::vector<Point> img(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    img[k] = block_of[x[blocks[k][0]]];
  return Perm(std::move(img));
}

std::size_t BlockSystem::fixed_blocks(Perm const &x) const
{
  std::size_t count = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    count += block_of[x[blocks[k][0]]] == k;
  return count;
}

namespace
{

struct UnionFind
{
  std::vector<Point> parent;
  std::vector<std::uint32_t> size;

  explicit UnionFind(std::size_t n)
  : parent(n), size(n, 1)
  {
    std::iota(parent.begin(), parent.end(), Point(0));
  }

  Point find(Point x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

} // namespace

Block minimal_block(std::vector<Perm> const &gens, std::size_t degree, Point a, Point b)
{
  Block all(degree);
  std::iota(all.begin(), all.end(), Point(0));
  if (a == b)
    return {a};

  UnionFind uf(degree);
  std::deque<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) -> bool {
    x = uf.find(x);
    y = uf.find(y);
    if (x == y)
      return true;
    if (uf.size[x] < uf.size[y])
      std::swap(x, y);
    uf.parent[y] = x;
    uf.size[x] += uf.size[y];
    queue.emplace_back(x, y);
    return 2 * uf.size[x] <= degree;
  };

  if (!unite(a, b))
    return all;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      if (!unite(g[x], g[y]))
        return all;
    }
  }

  Point ra = uf.find(a);
  Block res;
  for (Point p = 0; p < degree; ++p) {
    if (uf.find(p) == ra)
      res.push_back(p);
  }
  return res;
}

std::vector<Block> blocks_through_zero(std::vector<Perm> const &gens,
                                       std::vector<Perm> const &stab_gens,
                                       std::size_t degree,
                                       Budgets const &budgets)
{
  Block whole(degree);
  std::iota(whole.begin(), whole.end(), Point(0));

  std::set<Block> found{{0}, whole};
  std::deque<Block> queue{{0}};

  while (!queue.empty()) {
    Block k = queue.front();
    queue.pop_front();
    if (k.size() == degree)
      continue;

    // quotient by the block system of k, then minimal blocks over point 0
    auto sys = BlockSystem::from_block(gens, degree, k);
    std::size_t qdeg = sys.blocks.size();
    std::vector<Perm> qgens, qstab;
    for (auto const &g : gens)
      qgens.push_back(sys.induced(g));
    for (auto const &s : stab_gens)
      qstab.push_back(sys.induced(s));

    std::vector<char> seen(qdeg, 0);
    seen[0] = 1;
    for (Point beta = 1; beta < qdeg; ++beta) {
      if (seen[beta])
        continue;
      for (Point p : (qstab.empty() ? std::vector<Point>{beta} : orbit_of(qstab, beta)))
        seen[p] = 1;

      Block qb = minimal_block(qgens, qdeg, 0, beta);
      if (qb.size() == qdeg)
        continue;
      Block lifted;
      for (Point p : qb)
        lifted.insert(lifted.end(), sys.blocks[p].begin(), sys.blocks[p].end());
      std::sort(lifted.begin(), lifted.end());
      if (found.insert(lifted).second) {
        if (found.size() > budgets.overgroup_cap)
          throw Error(ErrorKind::BudgetExceeded, "overgroup count exceeds cap");
        queue.push_back(std::move(lifted));
      }
    }
  }

  std::vector<Block> res(found.begin(), found.end());
  std::stable_sort(res.begin(), res.end(), [](Block const &a, Block const &b) {
    return a.size() < b.size();
  });
  return res;
}

} // namespace sylgen::perm
