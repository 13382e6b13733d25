#include "sylgen/algebra/subspace.hpp"

#include "sylgen/error.hpp"

namespace sylgen::algebra
{

Subspace::Subspace(FieldPtr field, std::size_t ambient)
: _field(std::move(field)), _ambient(ambient)
{}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::vector<Vector> const &vectors)
{
  Subspace s(std::move(field), ambient);
  s._rows = vectors;
  s.reduce();
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient)
{
  std::vector<Vector> rows(ambient, Vector(ambient, field->zero()));
  for (std::size_t i = 0; i < ambient; ++i)
    rows[i][i] = field->one();
  return span(field, ambient, rows);
}

void Subspace::reduce()
{
  Field const &F = *_field;
  std::size_t r = 0;
  for (std::size_t col = 0; col < _ambient && r < _rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < _rows.size() && _rows[piv][col].is_zero())
      ++piv;
    if (piv == _rows.size())
      continue;
    std::swap(_rows[piv], _rows[r]);
    FieldElem s = F.inv(_rows[r][col]);
    for (auto &e : _rows[r])
      e = F.mul(e, s);
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (i == r || _rows[i][col].is_zero())
        continue;
      FieldElem c = _rows[i][col];
      for (std::size_t j = 0; j < _ambient; ++j)
        _rows[i][j] = F.sub(_rows[i][j], F.mul(c, _rows[r][j]));
    }
    ++r;
  }
  _rows.resize(r);
}

Subspace Subspace::kernel(Matrix const &m)
{
  Field const &F = *m.field();
  std::size_t n = m.n();

  // reduce m itself to RREF, then read off the null space
  std::vector<Vector> rows(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = m(i, j);
  }
  Subspace rowspace = span(m.field(), n, rows);

  std::vector<std::size_t> pivots;
  for (auto const &row : rowspace._rows) {
    std::size_t c = 0;
    while (row[c].is_zero())
      ++c;
    pivots.push_back(c);
  }

  std::vector<Vector> kernel_basis;
  std::size_t pi = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (pi < pivots.size() && pivots[pi] == free) {
      ++pi;
      continue;
    }
    Vector v(n, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(rowspace._rows[r][free]);
    kernel_basis.push_back(std::move(v));
  }
  return span(m.field(), n, kernel_basis);
}

bool Subspace::contains(Vector const &v) const
{
  Field const &F = *_field;
  Vector w = v;
  for (auto const &row : _rows) {
    std::size_t c = 0;
    while (row[c].is_zero())
      ++c;
    if (w[c].is_zero())
      continue;
    FieldElem coef = w[c];
    for (std::size_t j = 0; j < _ambient; ++j)
      w[j] = F.sub(w[j], F.mul(coef, row[j]));
  }
  for (auto e : w) {
    if (!e.is_zero())
      return false;
  }
  return true;
}

bool Subspace::contains(Subspace const &other) const
{
  for (auto const &v : other._rows) {
    if (!contains(v))
      return false;
  }
  return true;
}

Subspace Subspace::sum(Subspace const &other) const
{
  std::vector<Vector> rows = _rows;
  rows.insert(rows.end(), other._rows.begin(), other._rows.end());
  return span(_field, _ambient, rows);
}

Subspace Subspace::intersect(Subspace const &other) const
{
  // Zassenhaus: reduce [[a, a], [b, 0]]; rows with zero left half give the intersection
  Field const &F = *_field;
  std::size_t n = _ambient;
  std::vector<Vector> rows;
  for (auto const &a : _rows) {
    Vector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = a[j];
      r[n + j] = a[j];
    }
    rows.push_back(r);
  }
  for (auto const &b : other._rows) {
    Vector r(2 * n, F.zero());
    for (std::size_t j = 0; j < n; ++j)
      r[j] = b[j];
    rows.push_back(r);
  }
  Subspace big(_field, 2 * n);
  big._rows = rows;
  big.reduce();

  std::vector<Vector> res;
  for (auto const &r : big._rows) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[j].is_zero()) {
        left_zero = false;
        break;
      }
    }
    if (left_zero)
      res.emplace_back(r.begin() + static_cast<long>(n), r.end());
  }
  return span(_field, n, res);
}

Subspace Subspace::image(Matrix const &m) const
{
  std::vector<Vector> rows;
  rows.reserve(_rows.size());
  for (auto const &v : _rows)
    rows.push_back(m.apply(v));
  return span(_field, _ambient, rows);
}

Subspace Subspace::spin(std::vector<Matrix> const &gens, Vector const &v)
{
  FieldPtr field = gens.empty() ? nullptr : gens[0].field();
  if (!field)
    throw Error(ErrorKind::ConstructionFailed, "spin needs at least one generator");
  return spin(gens, span(field, v.size(), {v}));
}

Subspace Subspace::spin(std::vector<Matrix> const &gens, Subspace const &start)
{
  Subspace cur = start;
  std::vector<Vector> frontier = cur._rows;
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (auto const &v : frontier) {
      for (auto const &g : gens) {
        Vector w = g.apply(v);
        if (!cur.contains(w)) {
          cur._rows.push_back(w);
          cur.reduce();
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return cur;
}

std::vector<Vector> Subspace::all_vectors() const
{
  Field const &F = *_field;
  std::vector<Vector> res;
  res.emplace_back(_ambient, F.zero());
  for (auto const &row : _rows) {
    std::vector<Vector> next;
    next.reserve(res.size() * F.q());
    for (auto const &v : res) {
      for (auto c : F.elements()) {
        Vector w = v;
        for (std::size_t j = 0; j < _ambient; ++j)
          w[j] = F.add(w[j], F.mul(c, row[j]));
        next.push_back(std::move(w));
      }
    }
    res = std::move(next);
  }
  return res;
}

Subspace fixed_space(Matrix const &x, FieldElem lambda)
{
  Matrix shifted = x;
  Field const &F = *x.field();
  for (std::size_t i = 0; i < x.n(); ++i)
    shifted(i, i) = F.sub(shifted(i, i), lambda);
  return Subspace::kernel(shifted);
}

} // namespace sylgen::algebra
