#include "sylgen/algebra/matrix.hpp"

#include <string>

#include "sylgen/error.hpp"

namespace sylgen::algebra
{

Matrix::Matrix(FieldPtr field, std::size_t n)
: _field(std::move(field)), _n(n), _a(n * n, FieldElem())
{
  if (n == 0 || n > dim_cap)
    throw Error(ErrorKind::SizeCap, "matrix dimension " + std::to_string(n) +
                                    " outside 1.." + std::to_string(dim_cap));
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = field->one();
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, Vector const &diag)
{
  Matrix m(field, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, std::vector<std::vector<long>> const &rows)
{
  Matrix m(field, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j)
      m(i, j) = field->from_int(rows[i].at(j));
  }
  return m;
}

Matrix Matrix::block_diagonal(std::vector<Matrix> const &blocks)
{
  std::size_t n = 0;
  for (auto const &b : blocks)
    n += b.n();
  Matrix m(blocks.at(0).field(), n);
  std::size_t off = 0;
  for (auto const &b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i) {
      for (std::size_t j = 0; j < b.n(); ++j)
        m(off + i, off + j) = b(i, j);
    }
    off += b.n();
  }
  return m;
}

Matrix Matrix::operator*(Matrix const &other) const
{
  Field const &F = *_field;
  Matrix r(_field, _n);
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t k = 0; k < _n; ++k) {
      FieldElem a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < _n; ++j)
        r(i, j) = F.add(r(i, j), F.mul(a, other(k, j)));
    }
  }
  return r;
}

Matrix Matrix::operator+(Matrix const &other) const
{
  Matrix r(_field, _n);
  for (std::size_t i = 0; i < _a.size(); ++i)
    r._a[i] = _field->add(_a[i], other._a[i]);
  return r;
}

Matrix Matrix::operator-(Matrix const &other) const
{
  Matrix r(_field, _n);
  for (std::size_t i = 0; i < _a.size(); ++i)
    r._a[i] = _field->sub(_a[i], other._a[i]);
  return r;
}

Vector Matrix::apply(Vector const &v) const
{
  Field const &F = *_field;
  Vector r(_n, F.zero());
  for (std::size_t i = 0; i < _n; ++i) {
    FieldElem s = F.zero();
    for (std::size_t j = 0; j < _n; ++j)
      s = F.add(s, F.mul((*this)(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

Matrix Matrix::inverse() const
{
  Field const &F = *_field;
  Matrix a = *this, inv = identity(_field, _n);
  for (std::size_t col = 0; col < _n; ++col) {
    std::size_t piv = col;
    while (piv < _n && a(piv, col).is_zero())
      ++piv;
    if (piv == _n)
      throw Error(ErrorKind::Singular, "matrix is not invertible");
    if (piv != col) {
      for (std::size_t j = 0; j < _n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    FieldElem s = F.inv(a(col, col));
    for (std::size_t j = 0; j < _n; ++j) {
      a(col, j) = F.mul(a(col, j), s);
      inv(col, j) = F.mul(inv(col, j), s);
    }
    for (std::size_t i = 0; i < _n; ++i) {
      if (i == col || a(i, col).is_zero())
        continue;
      FieldElem c = a(i, col);
      for (std::size_t j = 0; j < _n; ++j) {
        a(i, j) = F.sub(a(i, j), F.mul(c, a(col, j)));
        inv(i, j) = F.sub(inv(i, j), F.mul(c, inv(col, j)));
      }
    }
  }
  return inv;
}

FieldElem Matrix::det() const
{
  Field const &F = *_field;
  Matrix a = *this;
  FieldElem d = F.one();
  for (std::size_t col = 0; col < _n; ++col) {
    std::size_t piv = col;
    while (piv < _n && a(piv, col).is_zero())
      ++piv;
    if (piv == _n)
      return F.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < _n; ++j)
        std::swap(a(piv, j), a(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(col, col));
    FieldElem s = F.inv(a(col, col));
    for (std::size_t i = col + 1; i < _n; ++i) {
      if (a(i, col).is_zero())
        continue;
      FieldElem c = F.mul(a(i, col), s);
      for (std::size_t j = col; j < _n; ++j)
        a(i, j) = F.sub(a(i, j), F.mul(c, a(col, j)));
    }
  }
  return d;
}

std::size_t rank_of_rows(FieldPtr const &field, std::vector<Vector> rows)
{
  Field const &F = *field;
  if (rows.empty())
    return 0;
  std::size_t n = rows[0].size(), r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero())
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    FieldElem s = F.inv(rows[r][col]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero())
        continue;
      FieldElem c = F.mul(rows[i][col], s);
      for (std::size_t j = col; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[r][j]));
    }
    ++r;
  }
  return r;
}

std::size_t Matrix::rank() const
{
  std::vector<Vector> rows(_n, Vector(_n));
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j)
      rows[i][j] = (*this)(i, j);
  }
  return rank_of_rows(_field, std::move(rows));
}

Matrix Matrix::transpose() const
{
  Matrix r(_field, _n);
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j)
      r(j, i) = (*this)(i, j);
  }
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const
{
  Matrix res = identity(_field, _n), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1u)
      res = res * base;
    base = base * base;
  }
  return res;
}

Matrix Matrix::frobenius(unsigned k) const
{
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i)
    e *= _field->p();
  return entry_power(e);
}

Matrix Matrix::entry_power(std::uint64_t e) const
{
  Matrix r(_field, _n);
  for (std::size_t i = 0; i < _a.size(); ++i)
    r._a[i] = _field->pow(_a[i], e);
  return r;
}

bool Matrix::is_identity() const
{
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      if ((*this)(i, j).code() != (i == j ? 1u : 0u))
        return false;
    }
  }
  return true;
}

std::uint64_t Matrix::order(std::uint64_t limit) const
{
  Matrix cur = *this;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (cur.is_identity())
      return k;
    cur = cur * *this;
  }
  throw Error(ErrorKind::BudgetExceeded, "matrix order exceeds limit");
}

} // namespace sylgen::algebra
