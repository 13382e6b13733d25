#include "sylgen/classical/matrix_groups.hpp"

#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "sylgen/error.hpp"

namespace sylgen::classical
{

using algebra::Field;
using algebra::FieldElem;

FieldPtr field_of_size(std::uint64_t q)
{
  auto pp = prime_power_decompose(q);
  if (pp.f == 0)
    throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  return Field::create(pp.p, pp.f);
}

bool MatrixGenSet::preserves_form(Matrix const &g) const
{
  if (!gram)
    return true;
  Matrix gs = form == FormKind::Unitary ? g.entry_power(sigma_power) : g;
  return g.transpose() * *gram * gs == *gram;
}

namespace
{

Matrix signed_cycle(FieldPtr const &F, unsigned n)
{
  // e_i -> e_(i+1), det (-1)^(n-1) fixed by a sign on the last entry
  Matrix w(F, n);
  for (unsigned i = 0; i < n; ++i)
    w((i + 1) % n, i) = F->one();
  if (n % 2 == 0)
    w(0, n - 1) = F->neg(F->one());
  return w;
}

} // namespace

MatrixGenSet sl_generators(unsigned n, std::uint64_t q)
{
  MatrixGenSet s;
  s.field = field_of_size(q);
  s.dim = n;
  FieldElem w = s.field->primitive();
  for (unsigned k = 0; k < s.field->f(); ++k) {
    Matrix t = Matrix::identity(s.field, n);
    t(0, 1) = s.field->pow(w, k);
    s.gens.push_back(t);
  }
  s.gens.push_back(signed_cycle(s.field, n));
  return s;
}

MatrixGenSet sp_generators(unsigned n, std::uint64_t q)
{
  if (n % 2 != 0)
    throw Error(ErrorKind::UnsupportedSpec, "symplectic dimension must be even");
  unsigned m = n / 2;
  MatrixGenSet s;
  s.field = field_of_size(q);
  s.dim = n;
  s.form = FormKind::Symplectic;
  auto const &F = s.field;

  Matrix J(F, n);
  for (unsigned i = 0; i < m; ++i) {
    J(i, m + i) = F->one();
    J(m + i, i) = F->neg(F->one());
  }
  s.gram = J;

  FieldElem w = F->primitive();
  for (unsigned k = 0; k < F->f(); ++k) {
    FieldElem lam = F->pow(w, k);
    for (unsigned i = 0; i + 1 < m; ++i) {
      Matrix x = Matrix::identity(F, n);
      x(i, i + 1) = lam;
      x(m + i + 1, m + i) = F->neg(lam);
      s.gens.push_back(x);
      s.gens.push_back(x.transpose());
    }
    Matrix y = Matrix::identity(F, n);
    y(m - 1, 2 * m - 1) = lam;
    s.gens.push_back(y);
    s.gens.push_back(y.transpose());
  }
  return s;
}

MatrixGenSet su_generators(unsigned n, std::uint64_t q)
{
  MatrixGenSet s;
  s.field = field_of_size(q * q);
  s.dim = n;
  s.form = FormKind::Unitary;
  s.sigma_power = q;
  s.gram = Matrix::identity(s.field, n);
  auto const &F = s.field;

  // [[a, b], [-b^, a^]] with N(a) + N(b) = 1; a few with a, b both nonzero
  // and one diagonal element generate SU_2(q)
  auto bar = [&](FieldElem x) { return F->pow(x, q); };
  auto norm = [&](FieldElem x) { return F->mul(x, bar(x)); };
  std::vector<Matrix> blocks;
  FieldElem w = F->primitive();
  FieldElem mu = F->pow(w, q - 1); // norm 1, order q + 1
  {
    Matrix d = Matrix::identity(F, n);
    d(0, 0) = mu;
    d(1, 1) = bar(mu);
    blocks.push_back(d);
  }
  auto elems = F->elements();
  for (auto a : elems) {
    if (blocks.size() >= 3)
      break;
    if (a.is_zero())
      continue;
    FieldElem target = F->sub(F->one(), norm(a));
    if (target.is_zero())
      continue;
    for (auto b : elems) {
      if (norm(b) == target) {
        Matrix g = Matrix::identity(F, n);
        g(0, 0) = a;
        g(0, 1) = b;
        g(1, 0) = F->neg(bar(b));
        g(1, 1) = bar(a);
        blocks.push_back(g);
        break;
      }
    }
  }
  s.gens = blocks;
  if (n > 2)
    s.gens.push_back(signed_cycle(F, n));
  return s;
}

Matrix neg_block(FieldPtr const &F, unsigned n, unsigned k, bool sl_target)
{
  std::vector<long> d(n, 1);
  for (unsigned i = 0; i < k && i < n; ++i)
    d[i] = -1;
  return diag(F, d, sl_target);
}

Matrix jordan(FieldPtr const &F, std::vector<unsigned> const &partition)
{
  unsigned n = 0;
  for (unsigned k : partition)
    n += k;
  Matrix m = Matrix::identity(F, n);
  unsigned at = 0;
  for (unsigned k : partition) {
    for (unsigned i = 0; i + 1 < k; ++i)
      m(at + i, at + i + 1) = F->one();
    at += k;
  }
  return m;
}

Matrix diag(FieldPtr const &F, std::vector<long> const &entries, bool sl_target)
{
  Vector d;
  for (long e : entries)
    d.push_back(F->from_int(e));
  Matrix m = Matrix::diagonal(F, d);
  if (sl_target && m.det() != F->one())
    throw Error(ErrorKind::NotInGroup, "determinant is not 1");
  return m;
}

std::vector<long> transvection_alphas(unsigned n)
{
  if (n < 2)
    throw Error(ErrorKind::NoValidAlphas, "need n >= 2");
  // all ones sum to n; switching k of alpha_2..alpha_n to 2 adds k
  unsigned k = (3 - n % 3) % 3;
  if (k > n - 1)
    throw Error(ErrorKind::NoValidAlphas, "no admissible coefficients");
  std::vector<long> alpha(n, 1);
  for (unsigned i = 0; i < k; ++i)
    alpha[n - 1 - i] = 2;
  return alpha;
}

Matrix transvection_allones(unsigned n)
{
  auto F = Field::create(3, 1);
  auto alpha = transvection_alphas(n);
  Matrix y = Matrix::identity(F, n);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned j = 0; j < n; ++j)
      y(r, j) = F->add(y(r, j), F->from_int(alpha[j]));
  }
  return y;
}

MatrixGenSet sl_sylow2_matrices(unsigned n)
{
  if (n < 2 || n > 16)
    throw Error(ErrorKind::SizeCap, "sl_sylow2_matrices needs 2 <= n <= 16");
  auto F = Field::create(3, 1);
  auto F9 = Field::create(3, 2);

  // GL_2(3) Sylow: multiplication by a generator of GF(9)* and the Frobenius,
  // written in the basis 1, x of GF(9)
  auto as_matrix = [&](auto map) {
    Matrix m(F, 2);
    for (unsigned col = 0; col < 2; ++col) {
      auto img = F9->coeffs(map(F9->from_coeffs(col == 0 ? std::vector<std::uint32_t>{1, 0}
                                                          : std::vector<std::uint32_t>{0, 1})));
      for (unsigned row = 0; row < 2; ++row)
        m(row, col) = FieldElem(img[row]);
    }
    return m;
  };
  Matrix zeta = as_matrix([&](FieldElem e) { return F9->mul(e, F9->primitive()); });
  Matrix frob = as_matrix([&](FieldElem e) { return F9->frobenius(e); });

  auto embed = [&](Matrix const &block, unsigned offset) {
    Matrix m = Matrix::identity(F, n);
    for (std::size_t i = 0; i < block.n(); ++i) {
      for (std::size_t j = 0; j < block.n(); ++j)
        m(offset + i, offset + j) = block(i, j);
    }
    return m;
  };
  auto swap_halves = [&](unsigned offset, unsigned half) {
    Matrix m = Matrix::identity(F, n);
    for (unsigned i = 0; i < half; ++i) {
      m(offset + i, offset + i) = F->zero();
      m(offset + half + i, offset + half + i) = F->zero();
      m(offset + i, offset + half + i) = F->one();
      m(offset + half + i, offset + i) = F->one();
    }
    return m;
  };

  // generators of the GL_n(3) Sylow 2-subgroup, blocks by decreasing digit
  std::vector<Matrix> gl;
  unsigned offset = 0;
  for (int bit = 4; bit >= 0; --bit) {
    unsigned size = 1u << bit;
    if (!(n & size))
      continue;
    if (size == 1) {
      gl.push_back(embed(Matrix::from_ints(F, {{-1}}), offset));
    } else {
      gl.push_back(embed(zeta, offset));
      gl.push_back(embed(frob, offset));
      for (unsigned half = 2; half < size; half *= 2)
        gl.push_back(swap_halves(offset, half));
    }
    offset += size;
  }

  // kernel of det: Schreier generators for the transversal {1, t}
  std::optional<Matrix> t;
  for (auto const &g : gl) {
    if (g.det() != F->one()) {
      t = g;
      break;
    }
  }
  MatrixGenSet s;
  s.field = F;
  s.dim = n;
  if (!t) {
    s.gens = gl;
    return s;
  }
  Matrix tinv = t->inverse();
  for (auto const &g : gl) {
    if (g.det() == F->one()) {
      s.gens.push_back(g);
      s.gens.push_back(*t * g * tinv);
    } else {
      s.gens.push_back(g * tinv);
      s.gens.push_back(*t * g);
    }
  }
  // drop identities and repeats
  std::vector<Matrix> uniq;
  for (auto const &g : s.gens) {
    if (g.is_identity())
      continue;
    bool dup = false;
    for (auto const &h : uniq)
      dup = dup || h == g;
    if (!dup)
      uniq.push_back(g);
  }
  s.gens = uniq;
  return s;
}

std::vector<Matrix> enumerate_matrix_group(std::vector<Matrix> const &gens, std::uint64_t cap)
{
  if (gens.empty())
    throw Error(ErrorKind::ConstructionFailed, "no generators");
  struct Hash
  {
    std::size_t operator()(Matrix const &m) const
    {
      std::size_t h = 0;
      for (auto e : m.entries())
        boost::hash_combine(h, e.code());
      return h;
    }
  };
  std::unordered_set<Matrix, Hash> seen;
  Matrix id = Matrix::identity(gens[0].field(), gens[0].n());
  std::vector<Matrix> all{id};
  seen.insert(id);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const &g : gens) {
      Matrix h = all[i] * g;
      if (seen.insert(h).second) {
        if (all.size() >= cap)
          throw Error(ErrorKind::BudgetExceeded, "matrix group larger than cap");
        all.push_back(std::move(h));
      }
    }
  }
  return all;
}

} // namespace sylgen::classical
