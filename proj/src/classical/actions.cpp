#include "sylgen/classical/actions.hpp"

#include <string>

#include "sylgen/error.hpp"

namespace sylgen::classical
{

using algebra::FieldElem;
using perm::Perm;
using perm::PermGroup;
using perm::Point;

std::uint64_t VectorDomain::code(Vector const &v) const
{
  std::uint64_t c = 0;
  for (std::size_t i = _n; i-- > 0;)
    c = c * _field->q() + v[i].code();
  return c;
}

Vector VectorDomain::normalize(Vector v) const
{
  for (auto const &e : v) {
    if (!e.is_zero()) {
      FieldElem s = _field->inv(e);
      for (auto &x : v)
        x = _field->mul(x, s);
      break;
    }
  }
  return v;
}

namespace
{

std::uint64_t space_size(FieldPtr const &F, std::size_t n, Budgets const &budgets)
{
  BigInt total = bigpow(BigInt(F->q()), static_cast<unsigned>(n));
  if (total > budgets.projective_cap)
    throw Error(ErrorKind::SizeCap, "vector space of size " + to_string(total) + " exceeds cap");
  return as_u64(total);
}

} // namespace

VectorDomain VectorDomain::projective(FieldPtr field, std::size_t n, Budgets const &budgets)
{
  VectorDomain d;
  d._field = field;
  d._n = n;
  d._projective = true;
  std::uint64_t total = space_size(field, n, budgets);
  d._index.assign(total, UINT32_MAX);

  std::uint32_t q = field->q();
  for (std::uint64_t c = 1; c < total; ++c) {
    Vector v(n);
    std::uint64_t x = c;
    for (std::size_t i = 0; i < n; ++i, x /= q)
      v[i] = FieldElem(static_cast<std::uint32_t>(x % q));
    if (d.normalize(v) != v)
      continue;
    d._index[c] = static_cast<std::uint32_t>(d._points.size());
    d._points.push_back(std::move(v));
  }
  if (d._points.size() > budgets.degree_cap)
    throw Error(ErrorKind::SizeCap, "projective degree exceeds cap");
  return d;
}

VectorDomain VectorDomain::orbits(std::vector<Matrix> const &gens, std::vector<Vector> const &start,
                                  Budgets const &budgets)
{
  VectorDomain d;
  d._field = gens.at(0).field();
  d._n = gens[0].n();
  if (bigpow(BigInt(d._field->q()), static_cast<unsigned>(d._n)) >= BigInt(UINT64_MAX))
    throw Error(ErrorKind::SizeCap, "vector codes exceed 64 bits");
  for (auto const &v : start) {
    if (d._sparse.count(d.code(v)))
      continue;
    d._sparse.emplace(d.code(v), static_cast<std::uint32_t>(d._points.size()));
    d._points.push_back(v);
    for (std::size_t i = d._points.size() - 1; i < d._points.size(); ++i) {
      for (auto const &g : gens) {
        Vector w = d.act(d._points[i], g);
        std::uint64_t c = d.code(w);
        if (!d._sparse.count(c)) {
          if (d._points.size() >= budgets.degree_cap)
            throw Error(ErrorKind::DegreeCap, "vector orbit exceeds degree cap");
          d._sparse.emplace(c, static_cast<std::uint32_t>(d._points.size()));
          d._points.push_back(std::move(w));
        }
      }
    }
  }
  return d;
}

Vector VectorDomain::act(Vector const &v, Matrix const &g) const
{
  auto const &F = *_field;
  Vector w(_n, F.zero());
  for (std::size_t i = 0; i < _n; ++i) {
    if (v[i].is_zero())
      continue;
    for (std::size_t j = 0; j < _n; ++j)
      w[j] = F.add(w[j], F.mul(v[i], g(i, j)));
  }
  return w;
}

std::uint32_t VectorDomain::index_of(Vector const &v) const
{
  std::uint32_t i = UINT32_MAX;
  if (_projective) {
    i = _index[code(normalize(v))];
  } else {
    auto it = _sparse.find(code(v));
    if (it != _sparse.end())
      i = it->second;
  }
  if (i == UINT32_MAX)
    throw Error(ErrorKind::NotInGroup, "vector outside the domain");
  return i;
}

Perm VectorDomain::perm_of(Matrix const &g) const
{
  std::vector<Point> img(_points.size());
  for (std::size_t i = 0; i < _points.size(); ++i)
    img[i] = index_of(act(_points[i], g));
  return Perm(std::move(img));
}

PermGroup projective_action(MatrixGenSet const &gens, VectorDomain const &dom,
                            std::optional<BigInt> expected, Budgets const &budgets)
{
  std::vector<Perm> perms;
  for (auto const &g : gens.gens)
    perms.push_back(dom.perm_of(g));
  perm::BuildOptions opts;
  opts.budgets = budgets;
  opts.order_bound = expected;
  PermGroup G = PermGroup::from_generators(perms, dom.size(), opts);
  if (expected && G.order() != *expected)
    throw Error(ErrorKind::ConstructionFailed, "generated order " + to_string(G.order()) +
                                               " differs from the formula " + to_string(*expected));
  return G;
}

PermGroup alternating_group(unsigned n)
{
  std::vector<Point> cyc;
  for (Point i = n % 2 ? 0 : 1; i < n; ++i)
    cyc.push_back(i);
  return PermGroup::from_generators({Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{0, 1, 2}})}, n);
}

ConstructedGroup construct_group(GroupSpec const &spec, Budgets const &budgets)
{
  ConstructedGroup out{spec, std::nullopt, std::nullopt, PermGroup()};
  if (spec.family == Family::A) {
    out.group = alternating_group(spec.n);
    if (out.group.order() != expected_order(spec))
      throw Error(ErrorKind::ConstructionFailed, "alternating group order mismatch");
    return out;
  }

  MatrixGenSet m;
  BigInt proj;
  switch (spec.family) {
    case Family::L:
    case Family::SL:
      m = sl_generators(spec.n, spec.q);
      proj = order_sl(spec.n, spec.q) / static_cast<unsigned long>(scalars_sl(spec.n, spec.q));
      break;
    case Family::U:
    case Family::SU:
      m = su_generators(spec.n, spec.q);
      proj = order_su(spec.n, spec.q) / static_cast<unsigned long>(scalars_su(spec.n, spec.q));
      break;
    default:
      m = sp_generators(spec.n, spec.q);
      proj = order_sp(spec.n, spec.q) / static_cast<unsigned long>(scalars_sp(spec.n, spec.q));
      break;
  }
  for (auto const &g : m.gens) {
    if (!m.preserves_form(g) || g.det() != m.field->one())
      throw Error(ErrorKind::ConstructionFailed, "generator outside the classical group");
  }
  auto dom = VectorDomain::projective(m.field, m.dim, budgets);
  out.group = projective_action(m, dom, proj, budgets);
  out.matrices = std::move(m);
  out.domain = std::move(dom);
  return out;
}

} // namespace sylgen::classical
