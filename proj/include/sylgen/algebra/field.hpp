#ifndef SYLGEN_ALGEBRA_FIELD_HPP
#define SYLGEN_ALGEBRA_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace sylgen::algebra
{

// Element of GF(p^f), encoded as sum c_i p^i over its coefficient vector
// with respect to the field's polynomial basis 1, x, ..., x^(f-1).
class FieldElem
{
public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint32_t code)
  : _code(code)
  {}

  constexpr std::uint32_t code() const
  { return _code; }

  constexpr bool is_zero() const
  { return _code == 0; }

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

private:
  std::uint32_t _code = 0;
};

class Field;
using FieldPtr = std::shared_ptr<Field const>;

class Field
{
public:
  static constexpr std::uint64_t size_cap = std::uint64_t(1) << 20;

  // field_create: the modulus is the lexicographically smallest monic
  // irreducible of degree f over GF(p), comparing coefficients from x^(f-1)
  // down to x^0.
  static FieldPtr create(std::uint64_t p, unsigned f);

  std::uint32_t p() const
  { return _p; }
  unsigned f() const
  { return _f; }
  std::uint32_t q() const
  { return _q; }

  // Coefficients c_0..c_(f-1) of the monic modulus x^f + sum c_i x^i.
  std::vector<std::uint32_t> const &modulus() const
  { return _modulus; }

  FieldElem zero() const
  { return FieldElem(0); }
  FieldElem one() const
  { return FieldElem(1); }
  FieldElem from_int(std::int64_t n) const;
  FieldElem primitive() const
  { return _primitive; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const
  { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  // x -> x^p
  FieldElem frobenius(FieldElem a) const
  { return pow(a, _p); }

  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(std::uint64_t k) const
  { return FieldElem(_exp[k % (_q - 1)]); }

  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  FieldElem from_coeffs(std::vector<std::uint32_t> const &c) const;

  // Every element, in code order.
  std::vector<FieldElem> elements() const;

  bool is_square(FieldElem a) const;

private:
  Field(std::uint32_t p, unsigned f);

  std::uint32_t _p = 0;
  unsigned _f = 0;
  std::uint32_t _q = 0;
  std::vector<std::uint32_t> _modulus;
  FieldElem _primitive;
  std::vector<std::uint32_t> _exp; // length q-1
  std::vector<std::uint32_t> _log; // length q, _log[0] unused
  std::vector<std::uint32_t> _add_table; // q*q entries when q is small
};

// Polynomial helpers over GF(p), exposed for the irreducibility tests.
namespace poly
{

using Poly = std::vector<std::uint32_t>; // coefficient i is x^i, trimmed

bool irreducible_exhaustive(Poly const &m, std::uint32_t p);
bool irreducible_rabin(Poly const &m, std::uint32_t p);

} // namespace poly

} // namespace sylgen::algebra

#endif // SYLGEN_ALGEBRA_FIELD_HPP
