#include "sylgen/algebra/field.hpp"

#include <string>

#include "sylgen/algebra/numbers.hpp"
#include "sylgen/error.hpp"

namespace sylgen::algebra
{

namespace poly
{

namespace
{

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
  std::uint64_t r = 1, b = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly mod(Poly a, Poly const &m, std::uint32_t p)
{
  trim(a);
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul(Poly const &a, Poly const &b, std::uint32_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint32_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
Poly frobenius_power(unsigned k, Poly const &m, std::uint32_t p)
{
  Poly x = {0, 1};
  Poly cur = mod(x, m, p);
  for (unsigned i = 0; i < k; ++i) {
    Poly base = cur, res = {1};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1u)
        res = mod(mul(res, base, p), m, p);
      base = mod(mul(base, base, p), m, p);
    }
    cur = res;
  }
  return cur;
}

} // namespace

bool irreducible_exhaustive(Poly const &m, std::uint32_t p)
{
  std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly cand(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (mod(m, cand, p).empty())
        return false;
    }
  }
  return true;
}

bool irreducible_rabin(Poly const &m, std::uint32_t p)
{
  unsigned n = static_cast<unsigned>(m.size() - 1);

  Poly full = frobenius_power(n, m, p);
  Poly diff = full;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  diff = mod(diff, m, p);
  if (!diff.empty())
    return false;

  for (auto r : prime_factors(n)) {
    Poly h = frobenius_power(n / static_cast<unsigned>(r), m, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    h = mod(h, m, p);
    Poly g = gcd(m, h, p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

} // namespace poly

namespace
{

using poly::Poly;

Poly decode(std::uint32_t code, std::uint32_t p, unsigned f)
{
  Poly c(f, 0);
  for (unsigned i = 0; i < f; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t encode(Poly const &c, std::uint32_t p)
{
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    code = code * p + c[i];
  return code;
}

// Multiply two residues (length f coefficient vectors) modulo the monic modulus.
Poly mulmod_residue(Poly const &a, Poly const &b, Poly const &monic, std::uint32_t p)
{
  unsigned f = static_cast<unsigned>(monic.size() - 1);
  std::vector<std::uint64_t> r(2 * f, 0);
  for (unsigned i = 0; i < f; ++i) {
    if (a[i] == 0)
      continue;
    for (unsigned j = 0; j < f; ++j)
      r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (unsigned k = 2 * f - 1; k >= f; --k) {
    std::uint64_t c = r[k];
    if (c == 0)
      continue;
    r[k] = 0;
    for (unsigned i = 0; i < f; ++i)
      r[k - f + i] = (r[k - f + i] + (p - monic[i]) % p * c) % p;
  }
  Poly res(f);
  for (unsigned i = 0; i < f; ++i)
    res[i] = static_cast<std::uint32_t>(r[i]);
  return res;
}

} // namespace

FieldPtr Field::create(std::uint64_t p, unsigned f)
{
  if (!is_prime(p))
    throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (f < 1)
    throw Error(ErrorKind::SizeCap, "extension degree must be at least 1");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > size_cap)
      throw Error(ErrorKind::SizeCap, "field size exceeds 2^20");
  }

  return FieldPtr(new Field(static_cast<std::uint32_t>(p), f));
}

Field::Field(std::uint32_t p, unsigned f)
: _p(p), _f(f), _q(static_cast<std::uint32_t>(ipow(p, f)))
{
  // modulus: lowest-code monic irreducible; code order compares c_(f-1) first
  Poly monic;
  if (f == 1) {
    _modulus = {0};
    monic = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < _q; ++code) {
      Poly cand = decode(code, p, f);
      cand.push_back(1);
      bool irreducible = f <= 4 ? poly::irreducible_exhaustive(cand, p)
                                : poly::irreducible_rabin(cand, p);
      if (irreducible) {
        monic = cand;
        _modulus = decode(code, p, f);
        break;
      }
    }
  }

  // primitive element: smallest code whose order is q-1
  auto order_factors = prime_factors(_q - 1);
  auto residue_pow = [&](Poly const &a, std::uint64_t e) {
    Poly res(f, 0), base = a;
    res[0] = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1u)
        res = f == 1 ? Poly{static_cast<std::uint32_t>(std::uint64_t(res[0]) * base[0] % p)}
                     : mulmod_residue(res, base, monic, p);
      base = f == 1 ? Poly{static_cast<std::uint32_t>(std::uint64_t(base[0]) * base[0] % p)}
                    : mulmod_residue(base, base, monic, p);
    }
    return res;
  };

  std::uint32_t gen_code = 0;
  for (std::uint32_t code = 1; code < _q; ++code) {
    Poly a = decode(code, p, f);
    bool primitive = true;
    for (auto r : order_factors) {
      if (encode(residue_pow(a, (_q - 1) / r), p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_code = code;
      break;
    }
  }
  if (_q == 2)
    gen_code = 1;
  _primitive = FieldElem(gen_code);

  _exp.resize(_q - 1);
  _log.assign(_q, 0);
  Poly g = decode(gen_code, p, f), cur(f, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k + 1 < _q; ++k) {
    std::uint32_t c = encode(cur, p);
    _exp[k] = c;
    _log[c] = k;
    cur = f == 1 ? Poly{static_cast<std::uint32_t>(std::uint64_t(cur[0]) * g[0] % p)}
                 : mulmod_residue(cur, g, monic, p);
  }

  if (f > 1 && _q <= 256) {
    _add_table.resize(std::size_t(_q) * _q);
    for (std::uint32_t a = 0; a < _q; ++a) {
      Poly ca = decode(a, p, f);
      for (std::uint32_t b = 0; b < _q; ++b) {
        Poly cb = decode(b, p, f), s(f);
        for (unsigned i = 0; i < f; ++i)
          s[i] = (ca[i] + cb[i]) % p;
        _add_table[std::size_t(a) * _q + b] = encode(s, p);
      }
    }
  }
}

FieldElem Field::from_int(std::int64_t n) const
{
  std::int64_t r = n % static_cast<std::int64_t>(_p);
  if (r < 0)
    r += _p;
  return FieldElem(static_cast<std::uint32_t>(r));
}

FieldElem Field::add(FieldElem a, FieldElem b) const
{
  if (_f == 1) {
    std::uint32_t s = a.code() + b.code();
    return FieldElem(s >= _p ? s - _p : s);
  }
  if (!_add_table.empty())
    return FieldElem(_add_table[std::size_t(a.code()) * _q + b.code()]);

  std::uint32_t x = a.code(), y = b.code(), res = 0, place = 1;
  for (unsigned i = 0; i < _f; ++i) {
    res += ((x % _p + y % _p) % _p) * place;
    x /= _p;
    y /= _p;
    place *= _p;
  }
  return FieldElem(res);
}

FieldElem Field::neg(FieldElem a) const
{
  if (_f == 1)
    return FieldElem(a.code() == 0 ? 0 : _p - a.code());

  std::uint32_t x = a.code(), res = 0, place = 1;
  for (unsigned i = 0; i < _f; ++i) {
    res += ((_p - x % _p) % _p) * place;
    x /= _p;
    place *= _p;
  }
  return FieldElem(res);
}

FieldElem Field::sub(FieldElem a, FieldElem b) const
{ return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const
{
  if (a.is_zero() || b.is_zero())
    return zero();
  std::uint32_t k = _log[a.code()] + _log[b.code()];
  if (k >= _q - 1)
    k -= _q - 1;
  return FieldElem(_exp[k]);
}

FieldElem Field::inv(FieldElem a) const
{
  if (a.is_zero())
    throw Error(ErrorKind::Singular, "inverse of zero field element");
  std::uint32_t k = _log[a.code()];
  return FieldElem(_exp[k == 0 ? 0 : _q - 1 - k]);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const
{
  if (e == 0)
    return one();
  if (a.is_zero())
    return zero();
  std::uint64_t k = (std::uint64_t(_log[a.code()]) * (e % (_q - 1))) % (_q - 1);
  return FieldElem(_exp[k]);
}

std::uint32_t Field::log(FieldElem a) const
{
  if (a.is_zero())
    throw Error(ErrorKind::Singular, "log of zero field element");
  return _log[a.code()];
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const
{ return decode(a.code(), _p, _f); }

FieldElem Field::from_coeffs(std::vector<std::uint32_t> const &c) const
{
  Poly reduced(_f, 0);
  for (unsigned i = 0; i < _f && i < c.size(); ++i)
    reduced[i] = c[i] % _p;
  return FieldElem(encode(reduced, _p));
}

std::vector<FieldElem> Field::elements() const
{
  std::vector<FieldElem> res;
  res.reserve(_q);
  for (std::uint32_t c = 0; c < _q; ++c)
    res.emplace_back(c);
  return res;
}

bool Field::is_square(FieldElem a) const
{
  if (a.is_zero())
    return true;
  if (_p == 2)
    return true;
  return _log[a.code()] % 2 == 0;
}

} // namespace sylgen::algebra
