#include "sylgen/classical/isotypic.hpp"

#include <algorithm>

#include "sylgen/error.hpp"
#include "sylgen/rng.hpp"

namespace sylgen::classical
{

using algebra::FieldElem;

std::vector<std::size_t> IsotypicDecomposition::dims() const
{
  std::vector<std::size_t> d;
  for (auto const &s : summands)
    d.push_back(s.space.dim());
  return d;
}

namespace
{

constexpr std::uint64_t exhaustive_limit = 1u << 14;

// coordinates of v in the echelon basis of U (v assumed in U)
Vector coords_in(Subspace const &U, Vector const &v)
{
  Vector c;
  for (auto const &row : U.basis()) {
    std::size_t piv = 0;
    while (row[piv].is_zero())
      ++piv;
    c.push_back(v[piv]);
  }
  return c;
}

std::vector<Vector> random_vectors(Subspace const &U, std::size_t count, std::uint64_t seed)
{
  Rng rng(seed);
  auto const &F = *U.field();
  std::vector<Vector> res;
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(U.ambient(), F.zero());
    for (auto const &row : U.basis()) {
      FieldElem c(static_cast<std::uint32_t>(rng.below(F.q())));
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = F.add(v[j], F.mul(c, row[j]));
    }
    res.push_back(std::move(v));
  }
  return res;
}

std::vector<Vector> probe_vectors(Subspace const &U, bool &exhaustive)
{
  BigInt total = bigpow(BigInt(U.field()->q()), static_cast<unsigned>(U.dim()));
  exhaustive = total <= exhaustive_limit;
  if (exhaustive)
    return U.all_vectors();
  auto v = U.basis();
  auto extra = random_vectors(U, 2000, 0x5eed);
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

bool is_zero_vec(Vector const &v)
{
  return std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.is_zero(); });
}

// Complement of the submodule W inside the submodule U via the averaged
// projection (1/|G|) sum g pi g^-1.
Subspace averaged_complement(std::vector<Matrix> const &elements, Subspace const &U, Subspace const &W)
{
  auto const &F = U.field();
  std::size_t n = U.ambient();

  // basis: W, then U beyond W, then the rest of F^n
  std::vector<Vector> basis = W.basis();
  Subspace cur = W;
  auto extend = [&](std::vector<Vector> const &cands) {
    for (auto const &v : cands) {
      if (!cur.contains(v)) {
        basis.push_back(v);
        cur = cur.sum(Subspace::span(F, n, {v}));
      }
    }
  };
  extend(U.basis());
  std::vector<Vector> std_basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, F->zero());
    e[i] = F->one();
    std_basis.push_back(e);
  }
  extend(std_basis);

  Matrix B(F, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      B(i, j) = basis[j][i];
  }
  Vector mask(n, F->zero());
  for (std::size_t j = 0; j < W.dim(); ++j)
    mask[j] = F->one();
  Matrix pi0 = B * Matrix::diagonal(F, mask) * B.inverse();

  Matrix avg(F, n);
  for (auto const &g : elements)
    avg = avg + g * pi0 * g.inverse();
  FieldElem inv_order = F->inv(F->from_int(static_cast<std::int64_t>(elements.size() % F->p())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      avg(i, j) = F->mul(avg(i, j), inv_order);
  }

  // U intersected with ker(avg)
  return Subspace::kernel(avg).intersect(U);
}

void split(std::vector<Matrix> const &gens, std::vector<Matrix> const &elements, Subspace const &U,
           std::vector<Summand> &out)
{
  bool exhaustive = false;
  for (auto const &v : probe_vectors(U, exhaustive)) {
    if (is_zero_vec(v))
      continue;
    Subspace W = Subspace::spin(gens, v);
    if (W.dim() < U.dim()) {
      split(gens, elements, W, out);
      split(gens, elements, averaged_complement(elements, U, W), out);
      return;
    }
  }
  out.push_back({U, 1, exhaustive});
}

} // namespace

bool is_irreducible(std::vector<Matrix> const &gens, Subspace const &U, bool *exhaustive)
{
  bool ex = false;
  for (auto const &v : probe_vectors(U, ex)) {
    if (is_zero_vec(v))
      continue;
    if (Subspace::spin(gens, v).dim() != U.dim())
      return false;
  }
  if (exhaustive)
    *exhaustive = ex;
  return true;
}

std::size_t hom_dimension(std::vector<Matrix> const &gens, Subspace const &U, Subspace const &W)
{
  // X : U -> W in the echelon bases, X rho_U(g) = rho_W(g) X for all gens
  auto const &F = *U.field();
  std::size_t du = U.dim(), dw = W.dim(), unknowns = du * dw;
  auto rho = [&](Subspace const &S, Matrix const &g) {
    std::vector<Vector> cols;
    for (auto const &b : S.basis())
      cols.push_back(coords_in(S, g.apply(b)));
    return cols; // cols[j][i] = entry (i, j)
  };
  std::vector<Vector> rows;
  for (auto const &g : gens) {
    auto ru = rho(U, g), rw = rho(W, g);
    for (std::size_t i = 0; i < dw; ++i) {
      for (std::size_t j = 0; j < du; ++j) {
        // (X ru)_{ij} - (rw X)_{ij} with X_{ab} at index a * du + b
        Vector eq(unknowns, F.zero());
        for (std::size_t k = 0; k < du; ++k)
          eq[i * du + k] = F.add(eq[i * du + k], ru[j][k]);
        for (std::size_t k = 0; k < dw; ++k)
          eq[k * du + j] = F.sub(eq[k * du + j], rw[k][i]);
        rows.push_back(std::move(eq));
      }
    }
  }
  return unknowns - algebra::rank_of_rows(U.field(), rows);
}

IsotypicDecomposition isotypic_summands(MatrixGenSet const &gens, std::uint64_t element_cap)
{
  auto elements = enumerate_matrix_group(gens.gens, element_cap);
  if (elements.size() % gens.field->p() == 0)
    throw Error(ErrorKind::NotSemisimple, "group order " + std::to_string(elements.size()) +
                                          " divisible by the characteristic");
  std::vector<Summand> parts;
  split(gens.gens, elements, Subspace::full(gens.field, gens.dim), parts);

  std::stable_sort(parts.begin(), parts.end(), [](Summand const &a, Summand const &b) {
    return a.space.dim() > b.space.dim();
  });
  for (auto &a : parts) {
    a.multiplicity = 0;
    for (auto const &b : parts) {
      if (a.space.dim() == b.space.dim() && hom_dimension(gens.gens, a.space, b.space) > 0)
        a.multiplicity++;
    }
  }
  return {parts};
}

} // namespace sylgen::classical
