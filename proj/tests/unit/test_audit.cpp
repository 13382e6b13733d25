#include <cmath>
#include <random>

#include "doctest.h"

#include "sylgen/audit/audit.hpp"
#include "sylgen/classical/actions.hpp"
#include "sylgen/classical/matrix_groups.hpp"
#include "sylgen/error.hpp"
#include "sylgen/overgroup/overgroup.hpp"
#include "sylgen/sylow/sylow.hpp"

using namespace sylgen;
using namespace sylgen::audit;

namespace
{

long double as_ld(Rational const &r)
{
  return static_cast<long double>(r.get_num().get_d()) / static_cast<long double>(r.get_den().get_d());
}

// value within the interval up to long double noise
bool brackets(Interval const &I, long double v)
{
  long double eps = 1e-15L * std::fabs(v) + 1e-300L;
  return as_ld(I.lo) <= v + eps && as_ld(I.hi) >= v - eps;
}

long ipow3(unsigned k)
{
  long r = 1;
  while (k--)
    r *= 3;
  return r;
}

// fixed 1-spaces of a unipotent Jordan form over F_3, by enumerating vectors
long fixed_lines(std::vector<unsigned> const &jordan)
{
  unsigned n = 0;
  for (auto b : jordan)
    n += b;
  std::vector<std::vector<int>> X(n, std::vector<int>(n, 0));
  unsigned off = 0;
  for (auto b : jordan) {
    for (unsigned i = 0; i < b; ++i) {
      X[off + i][off + i] = 1;
      if (i + 1 < b)
        X[off + i][off + i + 1] = 1;
    }
    off += b;
  }
  long fixed = 0;
  for (long code = 1; code < ipow3(n); ++code) {
    std::vector<int> v(n);
    long c = code;
    for (unsigned i = 0; i < n; ++i, c /= 3)
      v[i] = static_cast<int>(c % 3);
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j) {
      int s = 0;
      for (unsigned i = 0; i < n; ++i)
        s += v[i] * X[i][j];
      ok = s % 3 == v[j];
    }
    fixed += ok;
  }
  return fixed / 2;
}

long double ll(long double q)
{
  return std::log2(std::log2(q));
}

} // namespace

TEST_CASE("interval primitives bracket long double")
{
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 100000), den(1, 1000);
  for (int i = 0; i < 300; ++i) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    long double v = as_ld(x);
    for (unsigned bits : {32u, 64u, 128u}) {
      CAPTURE(bits);
      auto l = log2(Interval(x), bits);
      CHECK(brackets(l, std::log2(v)));
      CHECK(l.lo <= l.hi);
      auto s = sqrt(Interval(x), bits);
      CHECK(brackets(s, std::sqrt(v)));
      Rational t(num(rng) % 4000 - 2000, 100);
      t.canonicalize();
      CHECK(brackets(exp2(Interval(t), bits), std::exp2(as_ld(t))));
    }
    CHECK((log2(Interval(x), 128).hi - log2(Interval(x), 128).lo) < Rational(1, 1u << 30));
  }
  CHECK(log2(Interval(Rational(8)), 64).exact());
  CHECK(log2(Interval(Rational(8)), 64).lo == 3);
  CHECK(half_power(9, 3, 64).exact());
  CHECK(half_power(9, 3, 64).lo == 27);
  CHECK(brackets(half_power(3, -5, 64), std::pow(3.0L, -2.5L)));
  CHECK(brackets(pow(Interval(Rational(6)), Interval(Rational(7, 3)), 64), std::pow(6.0L, 7.0L / 3)));
  CHECK_THROWS_AS(Interval(1) / Interval(Rational(-1), Rational(1)), Error);
}

TEST_CASE("registry entries against independent float formulas")
{
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 27u, 81u, 243u, 2187u}) {
    long double Q = q;
    CAPTURE(q);
    CHECK(brackets(eval_bound("ex-e8", {0, q}), (5 + ll(Q)) * std::pow(Q, -8.0L) / (std::pow(Q, 4.0L) - 1)));
    CHECK(brackets(eval_bound("ex-e6", {0, q}),
                   0.5L * (Q + 1) * (4 + ll(Q)) / (std::pow(Q, 4.0L) - Q * Q + 1)));
    if (q >= 5)
      CHECK(brackets(eval_bound("symp4", {0, q}), (2 + ll(Q)) * 4 / (3 * Q)));
    for (long n : {7L, 9L, 13L}) {
      CAPTURE(n);
      long double s = (0.5L * (n - 1) * (2 * Q + 1) + Q * (Q + 1)) * std::pow(Q, (1.0L - n) / 2) +
                      std::pow(Q, -3.0L) + 1 / (Q - 1) + 1 / (Q * Q - 1);
      CHECK(brackets(eval_bound("p2", {n, q}), s));
      CHECK(brackets(eval_bound("p1", {n, q}), std::pow(Q, (4.0L - n) / 2) * ll(Q)));
      long double d = q >= 27 ? ll(Q) : 0;
      CHECK(brackets(eval_bound("psun-sigma1", {n, q}), (d + std::log2((long double)n)) *
                                                            std::pow(0.5L * (Q + 1), std::log2((long double)n) - 1) *
                                                            std::pow(Q, 3.5L - n)));
    }
    for (long n : {8L, 10L, 12L, 16L}) {
      CAPTURE(n);
      long double d = q >= 27 ? ll(Q) : 0;
      CHECK(brackets(eval_bound("p21", {n, q}), std::pow(Q, 5.0L - n) * (d + 2 * std::log2((long double)n) + 4)));
      long double a = Q / (Q - 1);
      long double s = (n - 1) * (2 * Q + 1) * std::pow(Q, (2.0L - n) / 2) + 2 / (Q * Q) * a +
                      2 * std::pow(Q, (2.0L * (n / 4) + 2 - n) / 2) * a +
                      2 * std::pow(Q, (2.0L * ((n - 2) / 4) + 2 - n) / 2) * a + 2 / (Q * Q - 1);
      CHECK(brackets(eval_bound("p22", {n, q}), s));
      long double lg = std::log2(n / 2.0L);
      long double beta = std::max(4 / (std::pow(Q, n / 2.0L) + 1) * lg,
                                  n % 4 == 2 ? std::pow(Q, 4.0L - n)
                                             : std::pow(Q, 4.0L - n) * (lg - 1) + std::pow(Q, 6.0L - n));
      CHECK(brackets(eval_bound("p31-beta", {n, q}), beta));
    }
  }
  CHECK(brackets(eval_bound("p31-alpha", {6, 27}),
                 std::max(2 * std::pow(27.0L, -4.0L) * ll(27), std::pow(27.0L, -2.0L) * ll(27))));
}

TEST_CASE("spot values")
{
  auto e8 = eval_bound("ex-e8", {0, 3});
  CHECK(verdict_of(find_bound("ex-e8"), e8) == Verdict::CertifiedTrue);
  CHECK(e8.hi < 1);

  auto tail = eval_bound("psln3-tail", {7, 0});
  CHECK(tail.exact());
  CHECK(tail.lo == Rational(16, 27));
  CHECK(verdict_of(find_bound("psln3-tail"), tail) == Verdict::CertifiedTrue);

  auto gk = eval_bound("remark-gk", {7, 0});
  CHECK(gk.exact());
  CHECK(gk.lo == Rational(52, 27));
  CHECK(verdict_of(find_bound("remark-gk"), gk) == Verdict::CertifiedTrue);

  auto rep = audit_range("p2", {{7, 7}, {7, 9}, {9, 5}, {11, 3}});
  CHECK(rep.all_expected);
  for (auto const &p : rep.points)
    CHECK(p.verdict == Verdict::CertifiedTrue);

  auto ex = audit_range("p2", {{7, 3}});
  CHECK(ex.points[0].excluded);
  CHECK(ex.points[0].verdict != Verdict::CertifiedTrue);
  CHECK(ex.all_expected);

  std::vector<BoundParams> primes;
  for (std::uint64_t q = 5; q <= 97; ++q)
    if (is_prime(q))
      primes.push_back({0, q});
  auto sp = audit_range("symp4", primes);
  CHECK(sp.points.size() == 23);
  CHECK(sp.all_expected);

  // the printed sum 1/200 + 1/45 = 49/1800 exceeds 1/43
  auto s = eval_bound("p31-sum", {});
  CHECK(s.exact());
  CHECK(s.lo == Rational(49, 1800));
  CHECK(verdict_of(find_bound("p31-sum"), s) == Verdict::CertifiedFalse);
  CHECK(audit_range("p31-sum", {BoundParams{}}).all_expected);
}

TEST_CASE("range and id errors")
{
  CHECK_THROWS_AS(eval_bound("no-such-bound", {7, 3}), Error);
  try {
    find_bound("nope");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::UnknownBound);
  }
  try {
    eval_bound("p2", {8, 3});
    CHECK(false);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::RangeViolation);
  }
  CHECK_THROWS_AS(eval_bound("p1", {7, 4}), Error);
  CHECK_THROWS_AS(eval_bound("symp4", {0, 3}), Error);
  CHECK_THROWS_AS(eval_bound("p31-alpha", {6, 9}), Error);
  CHECK_THROWS_AS(audit_range("p21", {{7, 3}}), Error);
}

TEST_CASE("rational entries have zero width")
{
  for (std::string id : {"psln2-sigma2-even", "psln2-sigma2-odd", "psun-sigma2-even", "psln3-total", "p33"}) {
    CAPTURE(id);
    for (auto const &p : default_grid(id, {243, 20}))
      CHECK(eval_bound(id, p).exact());
  }
}

TEST_CASE("full registry audit and precision doubling")
{
  for (auto const &e : registry()) {
    CAPTURE(e.id);
    auto grid = default_grid(e.id);
    CHECK(!grid.empty());
    auto lo = audit_range(e.id, grid, 64);
    CHECK(lo.all_expected);
    for (auto const &pt : lo.points) {
      auto v = eval_bound(e.id, pt.params, 128);
      auto w = verdict_of(e, v);
      CHECK(!(pt.verdict != Verdict::Undecided && w != Verdict::Undecided && w != pt.verdict));
      // the finer interval overlaps the coarser one
      CHECK(v.lo <= pt.value.hi);
      CHECK(v.hi >= pt.value.lo);
    }
  }
}

TEST_CASE("fpr cross-checks")
{
  auto inst = parabolic_instance(7, 3, 6, 1);
  CHECK(inst.values.size() == 6);
  CHECK(inst.values[0].second == Rational(365, 1093));
  auto gk = crosscheck_fpr_bound("gk-subspace", inst);
  CHECK(gk.status == "dominated");
  int applicable = 0;
  for (auto const &r : gk.rows) {
    if (r.m <= 3) {
      CHECK(r.applicable);
      CHECK(r.dominated);
      CHECK(r.bound == make_rational(2, bigpow(3, r.m)));
      ++applicable;
    } else {
      CHECK(!r.applicable);
    }
  }
  CHECK(applicable == 3);

  auto cap = crosscheck_fpr_bound("psln3-cap", parabolic_instance(3, 3, 2, 1));
  CHECK(cap.status == "out-of-range");
  CHECK(cap.rows[0].value == Rational(5, 13));
  CHECK(cap.rows[0].bound == Rational(1, 13));

  // the semisimple involution is outside the cap's unipotent hypothesis
  auto cap7 = crosscheck_fpr_bound("psln3-cap", inst);
  CHECK(cap7.status == "out-of-range");
  for (std::vector<unsigned> jordan : {std::vector<unsigned>{2, 2, 1, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 3, 3, 2, 1, 1}}) {
    auto u = unipotent_instance(3, jordan);
    CAPTURE(u.name);
    CHECK(u.values[0].second == Rational(fixed_lines(jordan), (ipow3(u.n) - 1) / 2));
    CHECK(crosscheck_fpr_bound("psln3-cap", u).status == "dominated");
  }
  // a transvection has dim C_V(x) = n-1, outside the cap
  CHECK(crosscheck_fpr_bound("psln3-cap", unipotent_instance(3, {2, 1, 1, 1, 1, 1})).status == "out-of-range");

  // PSp4(3) fprs recorded against 4/(3q) without asserting
  auto C = classical::construct_group(classical::parse_group_spec("S(4,3)"));
  auto P = sylow::sylow_subgroup(C.group, 2, 1).P;
  auto rep = overgroup::sigma_table(C.group, P, "S(4,3)");
  FprInstance sp{"S(4,3)", 4, 3, {}};
  for (auto const &row : rep.rows)
    for (std::size_t k = 0; k < row.fpr.size(); ++k)
      sp.values.emplace_back(static_cast<unsigned>(k), row.fpr[k]);
  auto ls = crosscheck_fpr_bound("ls91", sp);
  CHECK(ls.status == "recorded");
  CHECK(ls.rows.size() == sp.values.size());
  bool some_above = false;
  for (auto const &r : ls.rows)
    some_above = some_above || !r.dominated;
  CHECK(some_above);

  FprInstance bad{"fake", 7, 3, {{1, Rational(1, 1)}}};
  try {
    crosscheck_fpr_bound("gk-subspace", bad);
    CHECK(false);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::BoundViolated);
  }
  CHECK_THROWS_AS(crosscheck_fpr_bound("nope", inst), Error);
}

TEST_CASE("audit report json")
{
  auto rep = audit_range("p2", {{7, 3}, {7, 7}});
  auto j = rep.to_json();
  CHECK(j["schema"] == "sylgen-audit-v1");
  CHECK(j["id"] == "p2");
  CHECK(j["threshold"] == "11/12");
  CHECK(j["points"].size() == 2);
  CHECK(j["points"][0]["excluded"] == true);
  CHECK(j["points"][1]["verdict"] == "certified-true");
  CHECK(j["points"][1]["upper"].is_string());
  auto c = crosscheck_fpr_bound("gk-subspace", parabolic_instance(7, 3, 6, 1)).to_json();
  CHECK(c["rows"][0]["value"] == "365/1093");
}
