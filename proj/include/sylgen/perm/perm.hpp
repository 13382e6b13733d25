#ifndef SYLGEN_PERM_PERM_HPP
#define SYLGEN_PERM_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sylgen::perm
{

using Point = std::uint32_t;

// Permutation of {0, ..., D-1}, acting on the right: (a * b) applies a first.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  // throws ParseError unless images is a bijection
  explicit Perm(std::vector<Point> images);
  // from disjoint cycles, points 0-based
  static Perm from_cycles(std::size_t degree, std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const
  { return _img.size(); }
  Point operator[](Point i) const
  { return _img[i]; }
  std::vector<Point> const &images() const
  { return _img; }

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  // this^g = g^-1 * this * g
  Perm conjugate(Perm const &g) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  // sorted cycle lengths including fixed points
  std::vector<std::size_t> cycle_type() const;
  bool is_even() const;
  // smallest moved point, or degree() if identity
  Point first_moved() const;

  bool operator==(Perm const &other) const
  { return _img == other._img; }
  bool operator<(Perm const &other) const
  { return _img < other._img; }

  std::size_t hash() const;
  std::string str() const;

private:
  std::vector<Point> _img;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const
  { return p.hash(); }
};

// g raised to the p'-part of its order, a p-element
Perm element_ppart(Perm const &g, std::uint64_t p);
inline Perm element_2part(Perm const &g)
{ return element_ppart(g, 2); }

// orbits of <gens> on {0..degree-1}, each sorted, ordered by least point
std::vector<std::vector<Point>> orbits(std::vector<Perm> const &gens, std::size_t degree);
std::size_t orbit_count(std::vector<Perm> const &gens, std::size_t degree);
std::vector<Point> orbit_of(std::vector<Perm> const &gens, Point start);

} // namespace sylgen::perm

#endif // SYLGEN_PERM_PERM_HPP
