#include <map>

#include "doctest.h"

#include "oracles.hpp"
#include "sylgen/classical/actions.hpp"
#include "sylgen/classical/matrix_groups.hpp"
#include "sylgen/error.hpp"
#include "sylgen/overgroup/overgroup.hpp"
#include "sylgen/sylow/sylow.hpp"

using namespace sylgen;
using namespace sylgen::overgroup;

namespace
{

struct Setup
{
  classical::ConstructedGroup C;
  PermGroup P;
  OvergroupLattice lattice;
  perm::ConjClassTable classes;

  explicit Setup(std::string const &spec)
  : C(classical::construct_group(classical::parse_group_spec(spec))),
    P(sylow::sylow_subgroup(C.group, 2, 1).P),
    lattice(C.group, P),
    classes(perm::ConjClassTable::compute(C.group))
  {
  }
};

// |x^G ∩ H| by listing the elements of H
std::uint64_t class_hits(Setup const &s, std::uint32_t c, OvergroupBlock const &H)
{
  auto Hg = PermGroup::from_generators(H.gens, s.C.group.degree());
  std::uint64_t hits = 0;
  for (auto const &h : Hg.elements(1u << 20))
    hits += s.classes.class_of(h) == c;
  return hits;
}

} // namespace

TEST_CASE("lattice agrees with brute-force overgroups")
{
  for (std::string spec : {"L(2,7)", "L(2,11)", "L(2,8)", "L(2,9)", "L(2,13)"}) {
    CAPTURE(spec);
    Setup s(spec);
    auto G = oracle::closure(s.C.group.generators(), s.C.group.degree());
    auto brute = oracle::overgroups(G, s.P.generators(), s.C.group.degree());
    std::multiset<std::size_t> expect, got;
    for (auto const &H : brute)
      if (H.size() < G.size())
        expect.insert(H.size());
    for (auto const &H : s.lattice.all())
      got.insert(H.order.get_ui());
    CHECK(got == expect);
    // maximality against inclusion among the brute-force subgroups
    std::size_t brute_max = 0;
    for (auto const &H : brute) {
      if (H.size() == G.size())
        continue;
      bool maximal = true;
      for (auto const &K : brute)
        if (K.size() > H.size() && K.size() < G.size() &&
            std::includes(K.begin(), K.end(), H.begin(), H.end()))
          maximal = false;
      brute_max += maximal;
    }
    CHECK(s.lattice.maximal().size() == brute_max);
  }
}

TEST_CASE("overgroup invariants")
{
  Setup s("S(4,3)");
  for (auto const &H : s.lattice.all()) {
    CHECK(s.C.group.order() % H.order == 0);
    CHECK((s.C.group.order() / H.order) % 2 == 1);
    auto Hg = PermGroup::from_generators(H.gens, s.C.group.degree());
    CHECK(Hg.order() == H.order);
    for (auto const &g : s.P.generators())
      CHECK(Hg.contains(g));
  }
  auto M = s.lattice.maximal();
  REQUIRE(M.size() == 2);
  CHECK(M[0].order == 576);
  CHECK(M[1].order == 960);
}

TEST_CASE("sigma golden values")
{
  {
    Setup s("S(4,3)");
    auto rep = sigma_table(s.lattice, s.classes, "S(4,3)");
    CHECK(to_string(rep.max_sigma) == "7/15");
    CHECK(rep.rows.size() == 20);
    CHECK(rep.rows[0].sigma == 2);
  }
  {
    Setup s("L(2,11)");
    auto rep = sigma_table(s.lattice, s.classes);
    CHECK(to_string(rep.max_sigma) == "51/55");
    CHECK(s.lattice.maximal().size() == 5);
  }
  {
    Setup s("L(2,8)");
    auto M = s.lattice.maximal();
    REQUIRE(M.size() == 1);
    CHECK(M[0].order == 56);
    auto rep = sigma_table(s.lattice, s.classes);
    CHECK(to_string(rep.max_fpr) == "2/9");
  }
  {
    Setup s("L(3,3)");
    auto M = s.lattice.maximal();
    REQUIRE(M.size() == 2);
    CHECK(M[0].system.blocks.size() == 13);
    CHECK(M[1].system.blocks.size() == 13);
    auto F = s.C.matrices->field;
    auto x = s.C.domain->perm_of(classical::diag(F, {-1, -1, 1}));
    CHECK(to_string(fpr(s.lattice.action(), x, M[0])) == "5/13");
    CHECK(to_string(fpr(s.lattice.action(), x, M[1])) == "5/13");
    CHECK(to_string(sigma(s.lattice.action(), x, M)) == "10/13");
    CHECK(sigma_table(s.lattice, s.classes).max_sigma <= Rational(10, 13));
    CHECK(sigma(s.lattice.action(), x, M) == parabolic_sigma_semisimple(3, 3, 2, 1));
  }
  {
    Setup s("U(3,3)");
    CHECK(sigma_table(s.lattice, s.classes).max_sigma <= Rational(10, 13));
  }
  {
    Setup s("L(2,5)");
    CHECK(sigma_table(s.lattice, s.classes).max_sigma < 1);
  }
}

TEST_CASE("fpr by blocks equals fpr by element count")
{
  for (std::string spec : {"L(2,7)", "L(2,11)", "L(2,8)", "L(3,3)"}) {
    CAPTURE(spec);
    Setup s(spec);
    auto M = s.lattice.maximal();
    for (std::uint32_t c = 0; c < s.classes.size(); ++c) {
      Perm xc = s.lattice.action().action_of(s.classes.classes()[c].rep);
      for (auto const &H : M) {
        BigInt hits = static_cast<unsigned long>(class_hits(s, c, H));
        BigInt cent = s.classes.centralizer_order(c);
        // fixed points |C_G(x)| |x^G ∩ H| / |H|, ratio |x^G ∩ H| / |x^G|
        CHECK(BigInt(static_cast<unsigned long>(H.system.fixed_blocks(xc))) * H.order == cent * hits);
        CHECK(fpr(xc, H) == make_rational(cent * hits, s.C.group.order()));
      }
    }
  }
}

TEST_CASE("fpr power monotonicity and conjugation invariance")
{
  Setup s("S(4,3)");
  auto M = s.lattice.maximal();
  auto const &act = s.lattice.action();
  Rng rng(17);
  auto const &cls = s.classes.classes();
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    std::vector<Perm> images;
    for (auto const &H : M) {
      Rational f = fpr(act, cls[c].rep, H);
      CHECK(f >= 0);
      CHECK(f <= 1);
      for (std::int64_t m = 1; m <= static_cast<std::int64_t>(cls[c].order); ++m)
        CHECK(f <= fpr(act, cls[c].rep.pow(m), H));
    }
    Rational base = sigma(act, cls[c].rep, M);
    for (int k = 0; k < 10; ++k)
      CHECK(sigma(act, cls[c].rep.conjugate(s.C.group.random(rng)), M) == base);
  }
  CHECK(fpr(act, s.C.group.identity(), M[0]) == 1);
}

TEST_CASE("count lemma")
{
  {
    Setup s("L(2,11)");
    auto r = verify_count_lemma(s.lattice);
    CHECK(r.all_match);
    CHECK(r.normalizer_order == 12);
    std::map<unsigned long, std::uint64_t> by_order;
    for (auto const &row : r.rows)
      by_order[row.order.get_ui()] += row.observed;
    CHECK(by_order[12] == 3);
    CHECK(by_order[60] == 2);
    for (auto const &row : r.rows)
      if (row.order == 12)
        CHECK(row.predicted == 3);
  }
  {
    Setup s("S(4,3)");
    auto r = verify_count_lemma(s.lattice);
    CHECK(r.all_match);
    for (auto const &row : r.rows)
      CHECK(row.observed == 1);
  }
  for (std::string spec : {"L(2,7)", "L(3,3)", "U(3,3)", "L(2,13)"}) {
    Setup s(spec);
    CHECK(verify_count_lemma(s.lattice).all_match);
  }
}

TEST_CASE("count lemma against brute-force conjugates")
{
  // n(H,P): conjugates H^g containing P, counted over all g
  Setup s("L(2,11)");
  auto elems = s.C.group.elements(1u << 20);
  for (auto const &H : s.lattice.maximal()) {
    auto Hg = PermGroup::from_generators(H.gens, s.C.group.degree());
    std::set<std::vector<Perm>> conj;
    auto Hel = Hg.elements(1u << 20);
    for (auto const &g : elems) {
      std::vector<Perm> img;
      for (auto const &h : Hel)
        img.push_back(h.conjugate(g));
      std::sort(img.begin(), img.end());
      bool has_p = true;
      for (auto const &y : s.P.generators())
        has_p = has_p && std::binary_search(img.begin(), img.end(), y);
      if (has_p)
        conj.insert(img);
    }
    CHECK(conj.size() == (H.order == 12 ? 3u : 1u));
  }
}

TEST_CASE("parabolic sigma")
{
  CHECK(to_string(parabolic_sigma_semisimple(7, 3, 6, 1)) == "1086/1093");
  for (unsigned n = 2; n <= 6; ++n)
    CHECK(parabolic_sigma_semisimple(n, 3, n, 0) == n - 1);
  CHECK(to_string(parabolic_sigma_semisimple(3, 3, 2, 1)) == "10/13");
  CHECK_THROWS_AS(parabolic_sigma_semisimple(7, 3, 5, 1), Error);
}

TEST_CASE("sigma report json")
{
  Setup s("L(2,7)");
  auto rep = sigma_table(s.lattice, s.classes, "L(2,7)");
  auto j = rep.to_json();
  CHECK(j["schema"] == "sylgen-sigma-v1");
  CHECK(j["max_sigma"] == "6/7");
  CHECK(nlohmann::json::parse(j.dump()) == j);
  for (auto const &row : j["rows"])
    for (auto const &f : row["fpr"])
      CHECK(f.is_string());
}
