#include "sylgen/perm/perm.hpp"

#include <algorithm>
#include <numeric>

#include <boost/functional/hash.hpp>

#include "sylgen/algebra/numbers.hpp"
#include "sylgen/error.hpp"

namespace sylgen::perm
{

Perm::Perm(std::size_t degree)
: _img(degree)
{
  std::iota(_img.begin(), _img.end(), Point(0));
}

Perm::Perm(std::vector<Point> images)
: _img(std::move(images))
{
  std::vector<char> seen(_img.size(), 0);
  for (Point p : _img) {
    if (p >= _img.size() || seen[p])
      throw Error(ErrorKind::ParseError, "image list is not a permutation");
    seen[p] = 1;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point(0));
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree)
        throw Error(ErrorKind::ParseError, "cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm r;
  r._img.resize(_img.size());
  for (std::size_t i = 0; i < _img.size(); ++i)
    r._img[i] = rhs._img[_img[i]];
  return r;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  for (auto &x : _img)
    x = rhs._img[x];
  return *this;
}

Perm Perm::inverse() const
{
  Perm r;
  r._img.resize(_img.size());
  for (std::size_t i = 0; i < _img.size(); ++i)
    r._img[_img[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const
{
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm res(_img.size());
  while (k) {
    if (k & 1u)
      res *= base;
    base = base * base;
    k >>= 1;
  }
  return res;
}

Perm Perm::conjugate(Perm const &g) const
{
  // g^-1 x g maps g[i] -> g[x[i]]
  Perm r;
  r._img.resize(_img.size());
  for (std::size_t i = 0; i < _img.size(); ++i)
    r._img[g._img[i]] = g._img[_img[i]];
  return r;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < _img.size(); ++i) {
    if (_img[i] != i)
      return false;
  }
  return true;
}

std::uint64_t Perm::order() const
{
  BigInt o = 1;
  for (auto len : cycle_type())
    mpz_lcm_ui(o.get_mpz_t(), o.get_mpz_t(), len);
  if (!fits_u64(o))
    throw Error(ErrorKind::BudgetExceeded, "element order exceeds 64 bits");
  return as_u64(o);
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<char> seen(_img.size(), 0);
  for (Point i = 0; i < _img.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = _img[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    res.push_back(std::move(c));
  }
  return res;
}

std::vector<std::size_t> Perm::cycle_type() const
{
  std::vector<std::size_t> res;
  for (auto const &c : cycles())
    res.push_back(c.size());
  std::sort(res.begin(), res.end());
  return res;
}

bool Perm::is_even() const
{
  std::size_t transpositions = 0;
  for (auto const &c : cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

Point Perm::first_moved() const
{
  for (Point i = 0; i < _img.size(); ++i) {
    if (_img[i] != i)
      return i;
  }
  return static_cast<Point>(_img.size());
}

std::size_t Perm::hash() const
{
  return boost::hash_range(_img.begin(), _img.end());
}

std::string Perm::str() const
{
  std::string s;
  for (auto const &c : cycles()) {
    if (c.size() < 2)
      continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      s += (i ? "," : "") + std::to_string(c[i]);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm element_ppart(Perm const &g, std::uint64_t p)
{
  std::uint64_t o = g.order();
  std::uint64_t pp = 1;
  while (o % (pp * p) == 0)
    pp *= p;
  return g.pow(static_cast<std::int64_t>(o / pp));
}

std::vector<Point> orbit_of(std::vector<Perm> const &gens, Point start)
{
  std::vector<Point> orb{start};
  if (gens.empty())
    return orb;
  std::vector<char> seen(gens[0].degree(), 0);
  seen[start] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (auto const &g : gens) {
      Point y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  }
  return orb;
}

std::vector<std::vector<Point>> orbits(std::vector<Perm> const &gens, std::size_t degree)
{
  std::vector<std::vector<Point>> res;
  std::vector<char> seen(degree, 0);
  for (Point i = 0; i < degree; ++i) {
    if (seen[i])
      continue;
    auto orb = gens.empty() ? std::vector<Point>{i} : orbit_of(gens, i);
    for (Point p : orb)
      seen[p] = 1;
    std::sort(orb.begin(), orb.end());
    res.push_back(std::move(orb));
  }
  return res;
}

std::size_t orbit_count(std::vector<Perm> const &gens, std::size_t degree)
{
  return orbits(gens, degree).size();
}

} // namespace sylgen::perm
