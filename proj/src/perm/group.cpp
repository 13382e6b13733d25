#include "sylgen/perm/group.hpp"

#include <string>

#include "sylgen/error.hpp"

namespace sylgen::perm
{

namespace
{

using Level = PermGroup::Level;

struct Builder
{
  std::size_t degree;
  BuildOptions const &opts;
  std::vector<Level> levels;
  std::vector<std::vector<std::size_t>> processed; // per level, per generator
  std::uint64_t stored = 0;

  void push_level(Point base)
  {
    Level l;
    l.base = base;
    l.pos.assign(degree, -1);
    l.orbit.push_back(base);
    l.pos[base] = 0;
    l.u.emplace_back(degree);
    l.uinv.emplace_back(degree);
    levels.push_back(std::move(l));
    processed.emplace_back();
    account(1);
  }

  void account(std::uint64_t n)
  {
    stored += n * degree * 2;
    if (stored > opts.budgets.transversal_cap)
      throw Error(ErrorKind::BudgetExceeded, "transversal storage exceeds cap");
  }

  void extend_orbit(std::size_t li)
  {
    Level &l = levels[li];
    std::size_t before = l.orbit.size();
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      for (auto const &s : l.gens) {
        Point y = s[l.orbit[i]];
        if (l.pos[y] >= 0)
          continue;
        l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        l.u.push_back(l.u[i] * s);
        l.uinv.push_back(l.u.back().inverse());
      }
    }
    account(l.orbit.size() - before);
  }

  void add_gen(std::size_t li, Perm const &g)
  {
    levels[li].gens.push_back(g);
    processed[li].push_back(0);
    extend_orbit(li);
  }

  // strips g from level `from`; returns residue and the level where it stopped
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const
  {
    for (std::size_t l = from; l < levels.size(); ++l) {
      std::int32_t p = levels[l].pos[g[levels[l].base]];
      if (p < 0)
        return {std::move(g), l};
      g *= levels[l].uinv[static_cast<std::size_t>(p)];
    }
    return {std::move(g), levels.size()};
  }

  Point next_base(Perm const &h) const
  {
    for (Point b : opts.base_prefix) {
      bool used = false;
      for (auto const &l : levels)
        used = used || l.base == b;
      if (!used && h[b] != b)
        return b;
    }
    return h.first_moved();
  }

  bool bound_reached() const
  {
    if (!opts.order_bound)
      return false;
    BigInt prod = 1;
    for (auto const &l : levels)
      prod *= static_cast<unsigned long>(l.orbit.size());
    return prod >= *opts.order_bound;
  }

  void run(std::vector<Perm> const &gens)
  {
    for (auto const &g : gens) {
      if (g.is_identity())
        continue;
      bool fixes_base = true;
      for (auto const &l : levels)
        fixes_base = fixes_base && g[l.base] == l.base;
      if (fixes_base)
        push_level(next_base(g));
    }
    for (std::size_t li = 0; li < levels.size(); ++li) {
      for (auto const &g : gens) {
        if (g.is_identity())
          continue;
        bool fixes = true;
        for (std::size_t j = 0; j < li; ++j)
          fixes = fixes && g[levels[j].base] == levels[j].base;
        if (fixes)
          add_gen(li, g);
      }
    }
    if (bound_reached())
      return;

    std::size_t i = levels.size();
    while (i-- > 0) {
      bool restarted = false;
      for (std::size_t si = 0; si < levels[i].gens.size() && !restarted; ++si) {
        while (processed[i][si] < levels[i].orbit.size()) {
          std::size_t idx = processed[i][si]++;
          Level const &l = levels[i];
          Perm const &s = l.gens[si];
          Point img = s[l.orbit[idx]];
          Perm sg = l.u[idx] * s * l.uinv[static_cast<std::size_t>(l.pos[img])];
          if (sg.is_identity())
            continue;
          auto [h, j] = strip(std::move(sg), i + 1);
          if (h.is_identity())
            continue;
          if (j == levels.size())
            push_level(next_base(h));
          for (std::size_t l2 = i + 1; l2 <= j; ++l2)
            add_gen(l2, h);
          if (bound_reached())
            return;
          i = j + 1; // resume at level j
          restarted = true;
          break;
        }
      }
    }
  }
};

} // namespace

PermGroup PermGroup::from_generators(std::vector<Perm> gens, std::size_t degree, BuildOptions const &opts)
{
  if (degree > opts.budgets.degree_cap)
    throw Error(ErrorKind::DegreeCap, "degree " + std::to_string(degree) + " exceeds cap");
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw Error(ErrorKind::NotSubgroup, "generator degree mismatch");
  }

  Builder b{degree, opts, {}, {}, 0};
  b.run(gens);

  PermGroup G;
  G._degree = degree;
  G._gens = std::move(gens);
  G._levels = std::move(b.levels);
  G._order = 1;
  for (auto const &l : G._levels)
    G._order *= static_cast<unsigned long>(l.orbit.size());
  if (opts.order_bound && G._order > *opts.order_bound)
    throw Error(ErrorKind::NotSubgroup, "group order exceeds the stated bound");
  if (fits_u64(G._order)) {
    std::uint64_t r = 1;
    for (auto const &l : G._levels) {
      G._radix.push_back(r);
      r *= l.orbit.size();
    }
  }
  return G;
}

PermGroup PermGroup::from_chain(std::vector<Perm> gens, std::size_t degree, std::vector<StoredLevel> const &chain,
                                Budgets const &budgets)
{
  if (degree > budgets.degree_cap)
    throw Error(ErrorKind::DegreeCap, "degree " + std::to_string(degree) + " exceeds cap");
  BuildOptions opts;
  opts.budgets = budgets;
  Builder b{degree, opts, {}, {}, 0};
  for (std::size_t li = 0; li < chain.size(); ++li) {
    auto const &sl = chain[li];
    if (sl.base >= degree)
      throw Error(ErrorKind::ChecksumMismatch, "stored base point out of range");
    b.push_level(sl.base);
    for (auto const &g : sl.gens) {
      if (g.degree() != degree)
        throw Error(ErrorKind::ChecksumMismatch, "stored generator degree mismatch");
      for (std::size_t j = 0; j < li; ++j)
        if (g[chain[j].base] != chain[j].base)
          throw Error(ErrorKind::ChecksumMismatch, "stored generator moves an earlier base point");
      b.add_gen(li, g);
    }
  }
  PermGroup G;
  G._degree = degree;
  G._gens = std::move(gens);
  G._levels = std::move(b.levels);
  for (auto const &l : G._levels)
    G._order *= static_cast<unsigned long>(l.orbit.size());
  if (fits_u64(G._order)) {
    std::uint64_t r = 1;
    for (auto const &l : G._levels) {
      G._radix.push_back(r);
      r *= l.orbit.size();
    }
  }
  return G;
}

std::vector<PermGroup::StoredLevel> PermGroup::chain() const
{
  std::vector<StoredLevel> c;
  for (auto const &l : _levels)
    c.push_back({l.base, l.gens});
  return c;
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return from_generators({}, degree);
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &l : _levels)
    b.push_back(l.base);
  return b;
}

std::vector<std::uint64_t> PermGroup::orbit_sizes() const
{
  std::vector<std::uint64_t> s;
  for (auto const &l : _levels)
    s.push_back(l.orbit.size());
  return s;
}

bool PermGroup::contains(Perm const &x) const
{
  if (x.degree() != _degree)
    return false;
  Perm g = x;
  for (auto const &l : _levels) {
    std::int32_t p = l.pos[g[l.base]];
    if (p < 0)
      return false;
    g *= l.uinv[static_cast<std::size_t>(p)];
  }
  return g.is_identity();
}

Perm PermGroup::random(Rng &rng) const
{
  std::vector<std::uint32_t> c(_levels.size());
  for (std::size_t i = 0; i < _levels.size(); ++i)
    c[i] = static_cast<std::uint32_t>(rng.below(_levels[i].orbit.size()));
  return from_coordinates(c);
}

std::vector<std::uint32_t> PermGroup::coordinates(Perm const &x) const
{
  if (x.degree() != _degree)
    throw Error(ErrorKind::NotInGroup, "degree mismatch");
  std::vector<std::uint32_t> c;
  c.reserve(_levels.size());
  Perm g = x;
  for (auto const &l : _levels) {
    std::int32_t p = l.pos[g[l.base]];
    if (p < 0)
      throw Error(ErrorKind::NotInGroup, "element does not sift");
    c.push_back(static_cast<std::uint32_t>(p));
    g *= l.uinv[static_cast<std::size_t>(p)];
  }
  if (!g.is_identity())
    throw Error(ErrorKind::NotInGroup, "element does not sift");
  return c;
}

Perm PermGroup::from_coordinates(std::vector<std::uint32_t> const &c) const
{
  Perm g(_degree);
  for (std::size_t i = _levels.size(); i-- > 0;)
    g *= _levels[i].u.at(c.at(i));
  return g;
}

std::uint64_t PermGroup::rank(Perm const &x) const
{
  if (_radix.size() != _levels.size())
    throw Error(ErrorKind::BudgetExceeded, "group order exceeds 64 bits");
  auto c = coordinates(x);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    r += c[i] * _radix[i];
  return r;
}

Perm PermGroup::unrank(std::uint64_t r) const
{
  if (_radix.size() != _levels.size())
    throw Error(ErrorKind::BudgetExceeded, "group order exceeds 64 bits");
  std::vector<std::uint32_t> c(_levels.size());
  for (std::size_t i = 0; i < _levels.size(); ++i) {
    c[i] = static_cast<std::uint32_t>(r % _levels[i].orbit.size());
    r /= _levels[i].orbit.size();
  }
  return from_coordinates(c);
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const
{
  if (_order > cap)
    throw Error(ErrorKind::BudgetExceeded, "too many elements to enumerate");
  std::uint64_t n = as_u64(_order);
  std::vector<Perm> res;
  res.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r)
    res.push_back(unrank(r));
  return res;
}

bool PermGroup::is_subgroup_of(PermGroup const &g) const
{
  for (auto const &x : _gens) {
    if (!g.contains(x))
      return false;
  }
  return true;
}

} // namespace sylgen::perm
