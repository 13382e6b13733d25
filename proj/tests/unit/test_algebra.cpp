#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"

#include "sylgen/algebra/counting.hpp"
#include "sylgen/algebra/field.hpp"
#include "sylgen/algebra/matrix.hpp"
#include "sylgen/algebra/numbers.hpp"
#include "sylgen/algebra/subspace.hpp"
#include "sylgen/error.hpp"

using namespace sylgen;
using namespace sylgen::algebra;

namespace
{

// Plain modular vectors over a prime field, encoded base q, independent of Field.
struct PrimeSpace
{
  unsigned q, n;

  std::vector<unsigned> digits(unsigned code) const
  {
    std::vector<unsigned> d(n);
    for (unsigned i = 0; i < n; ++i, code /= q)
      d[i] = code % q;
    return d;
  }

  unsigned encode(std::vector<unsigned> const &d) const
  {
    unsigned code = 0;
    for (unsigned i = n; i-- > 0;)
      code = code * q + d[i];
    return code;
  }

  unsigned size() const
  {
    unsigned s = 1;
    for (unsigned i = 0; i < n; ++i)
      s *= q;
    return s;
  }

  unsigned comb(unsigned a, unsigned s, unsigned b, unsigned t) const
  {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < n; ++i)
      da[i] = (s * da[i] + t * db[i]) % q;
    return encode(da);
  }

  std::set<unsigned> span(std::vector<unsigned> const &gens) const
  {
    std::set<unsigned> s{0};
    for (unsigned g : gens) {
      std::set<unsigned> next;
      for (unsigned v : s) {
        for (unsigned c = 0; c < q; ++c)
          next.insert(comb(v, 1, g, c));
      }
      s = std::move(next);
    }
    return s;
  }
};

// Number of m-subspaces, by growing subspaces (as sorted point lists) one
// vector at a time; v is only tried when it is the least point of v + S.
std::uint64_t brute_subspaces(unsigned n, unsigned m, unsigned q)
{
  PrimeSpace sp{q, n};
  unsigned size = sp.size();
  std::vector<unsigned> add(size * size);
  for (unsigned a = 0; a < size; ++a) {
    for (unsigned b = 0; b < size; ++b)
      add[a * size + b] = sp.comb(a, 1, b, 1);
  }
  std::vector<unsigned> scale(size * q);
  for (unsigned a = 0; a < size; ++a) {
    for (unsigned c = 0; c < q; ++c)
      scale[a * q + c] = sp.comb(a, c, 0, 0);
  }

  std::set<std::vector<unsigned>> level{{0}};
  for (unsigned k = 0; k < m; ++k) {
    std::set<std::vector<unsigned>> next;
    for (auto const &s : level) {
      for (unsigned v = 1; v < size; ++v) {
        bool least = true;
        for (unsigned w : s) {
          if (add[v * size + w] <= v && w != 0) {
            least = false;
            break;
          }
        }
        if (!least)
          continue;
        std::vector<unsigned> t;
        t.reserve(s.size() * q);
        for (unsigned w : s) {
          for (unsigned c = 0; c < q; ++c)
            t.push_back(add[w * size + scale[v * q + c]]);
        }
        std::sort(t.begin(), t.end());
        next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }
  return level.size();
}

// 2-spaces of GF(3)^7 counted by their two smallest independent elements,
// keeping those invariant under diag(-1,...,-1,1).
std::uint64_t brute_invariant_planes_73()
{
  PrimeSpace sp{3, 7};
  auto act = [&](unsigned v) {
    auto d = sp.digits(v);
    for (unsigned i = 0; i < 6; ++i)
      d[i] = (3 - d[i]) % 3;
    return sp.encode(d);
  };
  std::uint64_t count = 0;
  for (unsigned u = 1; u < sp.size(); ++u) {
    if (sp.comb(u, 2, 0, 0) < u)
      continue; // u is the smaller of its two nonzero multiples
    for (unsigned v = u + 1; v < sp.size(); ++v) {
      auto s = sp.span({u, v});
      if (s.size() != 9)
        continue;
      std::vector<unsigned> nz(s.begin(), s.end());
      nz.erase(nz.begin());
      if (nz[0] != u)
        continue;
      unsigned second = 0;
      for (unsigned w : nz) {
        if (w != u && w != sp.comb(u, 2, 0, 0)) {
          second = w;
          break;
        }
      }
      if (second != v)
        continue;
      if (s.count(act(u)) && s.count(act(v)))
        ++count;
    }
  }
  return count;
}

std::uint64_t brute_fixed_points(PrimeSpace const &sp, std::vector<std::vector<unsigned>> const &m)
{
  std::uint64_t count = 0;
  for (unsigned v = 1; v < sp.size(); ++v) {
    auto d = sp.digits(v);
    bool leader = true;
    for (unsigned c = 2; c < sp.q; ++c) {
      if (sp.comb(v, c, 0, 0) < v)
        leader = false;
    }
    if (!leader)
      continue;
    std::vector<unsigned> img(sp.n, 0);
    for (unsigned i = 0; i < sp.n; ++i) {
      for (unsigned j = 0; j < sp.n; ++j)
        img[i] = (img[i] + m[i][j] * d[j]) % sp.q;
    }
    unsigned w = sp.encode(img);
    bool fixed = false;
    for (unsigned c = 1; c < sp.q; ++c) {
      if (sp.comb(v, c, 0, 0) == w)
        fixed = true;
    }
    count += fixed;
  }
  return count;
}

} // namespace

TEST_CASE("field_create sizes and errors")
{
  CHECK(Field::create(3, 1)->q() == 3);
  CHECK(Field::create(3, 2)->q() == 9);
  CHECK(Field::create(2, 3)->q() == 8);
  CHECK_THROWS_AS(Field::create(4, 1), Error);
  CHECK_THROWS_AS(Field::create(2, 21), Error);
  try {
    Field::create(6, 1);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::NonPrime);
  }
  try {
    Field::create(3, 13);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }
}

TEST_CASE("field axioms exhaustive for q <= 81")
{
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{
         {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 6}, {7, 2}, {3, 4}}) {
    auto F = Field::create(p, f);
    CAPTURE(F->q());
    for (auto a : F->elements()) {
      CHECK(F->pow(a, F->q()) == a);
      if (!a.is_zero()) {
        CHECK(F->mul(a, F->inv(a)) == F->one());
        CHECK(F->exp(F->log(a)) == a);
      }
      for (auto b : F->elements()) {
        CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
        CHECK(F->add(F->sub(a, b), b) == a);
      }
    }
    // primitive element has full order
    auto g = F->primitive();
    std::set<FieldElem> powers;
    for (unsigned k = 0; k + 1 < F->q(); ++k)
      powers.insert(F->pow(g, k));
    CHECK(powers.size() == F->q() - 1);
  }
}

TEST_CASE("field axioms sampled on large fields")
{
  auto F = Field::create(3, 10);
  for (std::uint32_t c = 1; c < F->q(); c += 997) {
    FieldElem a(c);
    CHECK(F->mul(a, F->inv(a)) == F->one());
    CHECK(F->pow(a, F->q()) == a);
    FieldElem b((c * 7919u) % F->q());
    CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
  }
}

TEST_CASE("irreducibility tests agree")
{
  using poly::Poly;
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned deg = 1; deg <= 4; ++deg) {
      unsigned total = 1;
      for (unsigned i = 0; i < deg; ++i)
        total *= p;
      for (unsigned code = 0; code < total; ++code) {
        Poly m(deg + 1);
        unsigned c = code;
        for (unsigned i = 0; i < deg; ++i, c /= p)
          m[i] = c % p;
        m[deg] = 1;
        CHECK(poly::irreducible_exhaustive(m, p) == poly::irreducible_rabin(m, p));
      }
    }
  }
}

TEST_CASE("mat_ops")
{
  auto F = Field::create(3, 1);
  auto I = Matrix::identity(F, 3);
  CHECK(I * I == I);

  auto t = Matrix::from_ints(F, {{1, 1}, {0, 1}});
  CHECK(t.pow(3).is_identity());
  CHECK(!t.pow(2).is_identity());

  auto x = Matrix::from_ints(F, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  CHECK(x.det() == F->one());

  auto a = Matrix::from_ints(F, {{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
  CHECK(a * a.inverse() == Matrix::identity(F, 3));

  auto s = Matrix::from_ints(F, {{1, 2}, {2, 1}});
  CHECK(s.det().is_zero());
  try {
    s.inverse();
    CHECK(false);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("fixed_space")
{
  auto F = Field::create(3, 1);
  auto I = Matrix::identity(F, 5);
  CHECK(fixed_space(I, F->one()).dim() == 5);

  std::vector<long> d(7, -1);
  d[6] = 1;
  std::vector<std::vector<long>> rows(7, std::vector<long>(7, 0));
  for (int i = 0; i < 7; ++i)
    rows[i][i] = d[i];
  auto x = Matrix::from_ints(F, rows);
  CHECK(fixed_space(x, F->one()).dim() == 1);
  CHECK(fixed_space(x, F->from_int(-1)).dim() == 6);

  auto j = Matrix::from_ints(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(fixed_space(j, F->one()).dim() == 2);
}

TEST_CASE("fixed_space rank plus nullity")
{
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {2, 2}, {5, 1}}) {
    auto F = Field::create(p, f);
    std::uint32_t seed = 12345;
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + trial % 4;
      Matrix m(F, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          seed = seed * 1103515245u + 12345u;
          m(i, k) = FieldElem((seed >> 16) % F->q());
        }
      }
      for (auto lambda : F->elements()) {
        Matrix shifted = m - Matrix::diagonal(F, Vector(n, lambda));
        auto fixed = fixed_space(m, lambda);
        CHECK(fixed.dim() + shifted.rank() == n);
        for (auto const &v : fixed.basis()) {
          auto w = m.apply(v);
          for (std::size_t i = 0; i < n; ++i)
            CHECK(w[i] == F->mul(lambda, v[i]));
        }
      }
    }
  }
}

TEST_CASE("subspace operations")
{
  auto F = Field::create(3, 1);
  auto e = [&](std::vector<long> v) {
    Vector r;
    for (long c : v)
      r.push_back(F->from_int(c));
    return r;
  };
  auto a = Subspace::span(F, 3, {e({1, 0, 0}), e({0, 1, 0})});
  auto b = Subspace::span(F, 3, {e({0, 1, 0}), e({0, 0, 1})});
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.intersect(b).contains(e({0, 2, 0})));
  CHECK(a.sum(b).dim() == 3);
  CHECK(Subspace::span(F, 3, {e({1, 1, 0}), e({1, 2, 0})}) == a);
  CHECK(a.all_vectors().size() == 9);
}

TEST_CASE("gauss_binom matches brute force")
{
  for (unsigned q : {2u, 3u, 5u}) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned m = 0; m <= n; ++m) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(gauss_binom(n, m, q) == brute_subspaces(n, m, q));
      }
    }
  }
  CHECK(gauss_binom(7, 0, 3) == 1);
  CHECK(gauss_binom(2, 1, 3) == 4);
  CHECK(gauss_binom(6, 2, 3) == 11011);
  CHECK(brute_subspaces(6, 2, 3) == 11011);
}

TEST_CASE("invariant_mspace_count")
{
  CHECK(invariant_mspace_count(6, 1, 0, 3) == 1);
  CHECK(invariant_mspace_count(6, 1, 1, 3) == 365);
  CHECK(invariant_mspace_count(6, 1, 2, 3) == 11375);
  CHECK(brute_invariant_planes_73() == 11375);

  for (unsigned dm = 0; dm <= 5; ++dm) {
    for (unsigned dp = 0; dp <= 4; ++dp) {
      for (unsigned m = 0; m <= dm + dp; ++m) {
        for (unsigned q : {2u, 3u, 4u, 5u})
          CHECK(invariant_mspace_count(dm, dp, m, q) == invariant_mspace_count(dm, dp, dm + dp - m, q));
      }
    }
  }
}

TEST_CASE("fixed_one_spaces")
{
  auto F = Field::create(3, 1);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(fixed_one_spaces(Matrix::identity(F, n)) == (ipow(3, n) - 1) / 2);

  std::vector<std::vector<long>> rows(7, std::vector<long>(7, 0));
  std::vector<std::vector<unsigned>> urows(7, std::vector<unsigned>(7, 0));
  for (int i = 0; i < 7; ++i) {
    rows[i][i] = i < 6 ? -1 : 1;
    urows[i][i] = i < 6 ? 2 : 1;
  }
  CHECK(fixed_one_spaces(Matrix::from_ints(F, rows)) == 365);
  CHECK(brute_fixed_points(PrimeSpace{3, 7}, urows) == 365);

  auto j = Matrix::from_ints(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(fixed_one_spaces(j) == 4);
  CHECK(brute_fixed_points(PrimeSpace{3, 3}, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}) == 4);
}

TEST_CASE("number helpers")
{
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(parse_rational("1086/1093") == make_rational(1086, 1093));
  CHECK_THROWS_AS(parse_rational("1/x"), Error);
  CHECK(p_part(25920, 2) == 64);
  CHECK(p_adic_valuation(25920, 3) == 4);
  CHECK(odd_part(12) == 3);
  CHECK(is_prime_power(81));
  CHECK(!is_prime_power(12));
  CHECK(prime_power_decompose(343).p == 7);
  CHECK(prime_power_decompose(343).f == 3);
}
