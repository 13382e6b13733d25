#include "sylgen/perm/coset_action.hpp"

#include <string>

#include <boost/functional/hash.hpp>

#include "sylgen/error.hpp"

namespace sylgen::perm
{

CosetAction::CosetAction(PermGroup G, PermGroup P, Budgets const &budgets)
: _G(std::move(G)), _P(std::move(P))
{
  if (_P.degree() != _G.degree() || !_P.is_subgroup_of(_G))
    throw Error(ErrorKind::NotSubgroup, "P is not a subgroup of G");
  BigInt index = _G.order() / _P.order();
  if (index > budgets.coset_degree_cap)
    throw Error(ErrorKind::DegreeCap, "coset degree " + to_string(index) + " exceeds cap");
  std::uint32_t D = static_cast<std::uint32_t>(as_u64(index));

  _orbit_id.assign(_G.degree(), 0);
  auto orbs = orbits(_P.generators(), _P.degree());
  for (std::uint32_t k = 0; k < orbs.size(); ++k) {
    for (Point p : orbs[k])
      _orbit_id[p] = k;
  }

  _reps.reserve(D);
  _reps.emplace_back(_G.degree());
  _reps_inv.emplace_back(_G.degree());
  _index.emplace(signature(_reps[0]), 0);

  auto const &gens = _G.generators();
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(D));
  for (std::uint32_t i = 0; i < _reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm h = _reps[i] * gens[s];
      std::uint64_t sig = signature(h);
      std::int64_t c = lookup(h, sig);
      if (c < 0) {
        if (_reps.size() >= D)
          throw Error(ErrorKind::ConstructionFailed, "coset enumeration overflow");
        c = static_cast<std::int64_t>(_reps.size());
        _index.emplace(sig, static_cast<std::uint32_t>(c));
        _reps_inv.push_back(h.inverse());
        _reps.push_back(std::move(h));
      }
      images[s][i] = static_cast<Point>(c);
    }
  }
  if (_reps.size() != D)
    throw Error(ErrorKind::ConstructionFailed, "coset enumeration incomplete");

  for (auto &img : images)
    _gen_images.emplace_back(std::move(img));
  for (auto const &p : _P.generators())
    _sub_images.push_back(action_of(p));
}

std::uint64_t CosetAction::signature(Perm const &g) const
{
  // delta -> orbit id of delta^(g^-1), constant on P g
  std::vector<std::uint32_t> sig(g.degree());
  for (Point d = 0; d < g.degree(); ++d)
    sig[g[d]] = _orbit_id[d];
  return boost::hash_range(sig.begin(), sig.end());
}

std::int64_t CosetAction::lookup(Perm const &g, std::uint64_t sig) const
{
  auto [lo, hi] = _index.equal_range(sig);
  for (auto it = lo; it != hi; ++it) {
    if (_P.contains(g * _reps_inv[it->second]))
      return it->second;
  }
  return -1;
}

std::uint32_t CosetAction::coset_of(Perm const &g) const
{
  std::int64_t c = lookup(g, signature(g));
  if (c < 0)
    throw Error(ErrorKind::NotInGroup, "element lies in no coset of the action");
  return static_cast<std::uint32_t>(c);
}

Perm CosetAction::action_of(Perm const &x) const
{
  std::vector<Point> img(_reps.size());
  for (std::size_t i = 0; i < _reps.size(); ++i)
    img[i] = coset_of(_reps[i] * x);
  return Perm(std::move(img));
}

std::vector<std::uint32_t> CosetAction::fixed_by_subgroup() const
{
  std::vector<std::uint32_t> res;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    bool fixed = true;
    for (auto const &s : _sub_images)
      fixed = fixed && s[i] == i;
    if (fixed)
      res.push_back(i);
  }
  return res;
}

} // namespace sylgen::perm
