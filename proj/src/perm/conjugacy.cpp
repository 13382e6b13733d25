#include "sylgen/perm/conjugacy.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "sylgen/error.hpp"

namespace sylgen::perm
{

ConjClassTable ConjClassTable::compute(PermGroup const &G, Budgets const &budgets)
{
  if (G.order() > budgets.class_order_cap || G.degree() > budgets.class_degree_cap)
    throw Error(ErrorKind::BudgetExceeded, "group above the exact class enumeration budget");

  std::uint64_t n = as_u64(G.order());
  ConjClassTable t;
  t._class_of_rank.assign(n, UINT32_MAX);
  auto const &gens = G.generators();

  std::vector<std::uint64_t> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (t._class_of_rank[r] != UINT32_MAX)
      continue;
    auto id = static_cast<std::uint32_t>(t._classes.size());
    t._class_of_rank[r] = id;
    queue.assign(1, r);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Perm x = G.unrank(queue[i]);
      for (auto const &s : gens) {
        std::uint64_t c = G.rank(x.conjugate(s));
        if (t._class_of_rank[c] == UINT32_MAX) {
          t._class_of_rank[c] = id;
          queue.push_back(c);
        }
      }
    }
    ConjClass cls;
    cls.rep = G.unrank(r);
    cls.rep_rank = r;
    cls.size = queue.size();
    cls.order = cls.rep.order();
    t._classes.push_back(std::move(cls));
  }
  t._G = G;
  t._order = G.order();
  return t;
}

ConjClassTable ConjClassTable::from_parts(PermGroup const &G, std::vector<std::uint32_t> class_of_rank)
{
  if (class_of_rank.size() != G.order())
    throw Error(ErrorKind::ChecksumMismatch, "class data does not match the group order");
  ConjClassTable t;
  t._class_of_rank = std::move(class_of_rank);
  for (std::uint64_t r = 0; r < t._class_of_rank.size(); ++r) {
    std::uint32_t c = t._class_of_rank[r];
    if (c == t._classes.size()) {
      ConjClass cls;
      cls.rep = G.unrank(r);
      cls.rep_rank = r;
      cls.order = cls.rep.order();
      t._classes.push_back(std::move(cls));
    } else if (c > t._classes.size()) {
      throw Error(ErrorKind::ChecksumMismatch, "class ids out of order");
    }
    t._classes[c].size++;
  }
  t._G = G;
  t._order = G.order();
  return t;
}

std::uint32_t ConjClassTable::class_of(Perm const &x) const
{
  return _class_of_rank[_G.rank(x)];
}

std::uint32_t ConjClassTable::power_class(std::uint32_t c, std::int64_t m) const
{
  return class_of(_classes[c].rep.pow(m));
}

namespace
{

std::uint64_t subgroup_key(PermGroup const &G, std::vector<Perm> const &elements, Perm const &t)
{
  std::vector<std::uint64_t> ranks;
  ranks.reserve(elements.size());
  for (auto const &e : elements)
    ranks.push_back(G.rank(e.conjugate(t)));
  std::sort(ranks.begin(), ranks.end());
  return boost::hash_range(ranks.begin(), ranks.end());
}

} // namespace

ConjOrbitResult conj_orbit_stabilizer(PermGroup const &G, PermGroup const &Q, Budgets const &budgets)
{
  if (!Q.is_subgroup_of(G))
    throw Error(ErrorKind::NotSubgroup, "Q is not a subgroup of G");
  auto elements = Q.elements(budgets.subgroup_elements_cap);
  auto const &gens = G.generators();
  std::size_t D = G.degree();

  // orbit points are Q^t for stored t; equal keys are confirmed exactly
  std::vector<Perm> reps{Perm(D)}, reps_inv{Perm(D)};
  std::unordered_multimap<std::uint64_t, std::uint32_t> index;
  index.emplace(subgroup_key(G, elements, reps[0]), 0);
  std::vector<std::vector<std::uint32_t>> edge(gens.size());

  auto same = [&](Perm const &t, std::uint32_t j) {
    // Q^t == Q^(r_j) iff conjugating Q^t back by r_j^-1 stays in Q
    for (auto const &q : Q.generators()) {
      if (!Q.contains(q.conjugate(t).conjugate(reps_inv[j])))
        return false;
    }
    return true;
  };

  for (std::uint32_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm t = reps[i] * gens[s];
      std::uint64_t key = subgroup_key(G, elements, t);
      std::int64_t found = -1;
      auto [lo, hi] = index.equal_range(key);
      for (auto it = lo; it != hi && found < 0; ++it) {
        if (same(t, it->second))
          found = it->second;
      }
      if (found < 0) {
        if (reps.size() >= budgets.orbit_cap)
          throw Error(ErrorKind::BudgetExceeded, "conjugation orbit exceeds cap");
        found = static_cast<std::int64_t>(reps.size());
        index.emplace(key, static_cast<std::uint32_t>(found));
        reps_inv.push_back(t.inverse());
        reps.push_back(std::move(t));
      }
      edge[s].push_back(static_cast<std::uint32_t>(found));
    }
  }

  BigInt target = G.order() / static_cast<unsigned long>(reps.size());
  BuildOptions opts;
  opts.order_bound = target;
  opts.budgets = budgets;
  std::vector<Perm> ngens = Q.generators();
  PermGroup N = PermGroup::from_generators(ngens, D, opts);
  for (std::uint32_t i = 0; i < reps.size() && N.order() < target; ++i) {
    for (std::size_t s = 0; s < gens.size() && N.order() < target; ++s) {
      Perm sg = reps[i] * gens[s] * reps_inv[edge[s][i]];
      if (sg.is_identity() || N.contains(sg))
        continue;
      ngens.push_back(std::move(sg));
      N = PermGroup::from_generators(ngens, D, opts);
    }
  }
  if (N.order() != target)
    throw Error(ErrorKind::ConstructionFailed, "stabilizer order does not match orbit");
  return {reps.size(), std::move(N)};
}

} // namespace sylgen::perm
