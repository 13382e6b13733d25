#include "doctest.h"

#include "sylgen/classical/actions.hpp"
#include "sylgen/error.hpp"
#include "sylgen/generation/generation.hpp"
#include "sylgen/sylow/sylow.hpp"

using namespace sylgen;
using namespace sylgen::generation;

namespace
{

PermGroup build(std::string const &s)
{
  return classical::construct_group(classical::parse_group_spec(s)).group;
}

ErrorKind kind_of(std::function<void()> const &f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.kind();
  }
  return ErrorKind::IoError;
}

} // namespace

TEST_CASE("witnesses for every class")
{
  for (std::string spec : {"L(2,7)", "L(3,3)", "U(3,3)", "L(2,8)"}) {
    CAPTURE(spec);
    auto G = build(spec);
    auto P = sylow::sylow_subgroup(G, 2, 1).P;
    auto classes = perm::ConjClassTable::compute(G);
    auto all = exists_generating_conjugate_all_classes(G, P, classes, 200, 42);
    CHECK(all.all_witnessed);
    CHECK(all.reports.size() + 1 == classes.size());
    for (auto const &r : all.reports) {
      REQUIRE(r.witness.has_value());
      CHECK(generates_with(G, P, r.x.conjugate(r.witness->g)));
      CHECK(verify_witness(G, P, r.x, r.to_json()));
      CHECK(r.failures <= r.samples);
    }
    if (spec == "L(3,3)")
      CHECK(all.reports.size() == 11);
  }
}

TEST_CASE("identity never generates")
{
  auto G = build("L(2,7)");
  auto P = sylow::sylow_subgroup(G, 2, 1).P;
  auto r = mc_generation(G, P, G.identity(), 50, 3);
  CHECK(!r.witness);
  CHECK(r.q_hat() == 1);
  CHECK(!verify_witness(G, P, G.identity(), r.to_json()));
}

TEST_CASE("defining characteristic sylow")
{
  for (std::string spec : {"L(2,7)", "L(2,11)", "L(2,9)"}) {
    auto C = classical::construct_group(classical::parse_group_spec(spec));
    auto p = prime_power_decompose(C.spec.q).p;
    auto P = sylow::sylow_subgroup(C.group, p, 1).P;
    auto classes = perm::ConjClassTable::compute(C.group);
    CHECK(exists_generating_conjugate_all_classes(C.group, P, classes, 200, 5).all_witnessed);
  }
}

TEST_CASE("tampered witness is rejected")
{
  auto G = build("L(2,11)");
  auto P = sylow::sylow_subgroup(G, 2, 1).P;
  auto classes = perm::ConjClassTable::compute(G);
  auto x = classes.classes()[1].rep;
  auto r = mc_generation(G, P, x, 20, 8);
  REQUIRE(r.witness);
  auto j = r.to_json();
  CHECK(verify_witness(G, P, x, j));
  auto c = j["witness"]["coordinates"].get<std::vector<std::uint32_t>>();
  c[0] = (c[0] + 1) % G.levels()[0].orbit.size();
  j["witness"]["coordinates"] = c;
  CHECK(!verify_witness(G, P, x, j));
}

TEST_CASE("mc reports are reproducible")
{
  auto G = build("L(2,13)");
  auto P = sylow::sylow_subgroup(G, 2, 1).P;
  auto classes = perm::ConjClassTable::compute(G);
  auto a = exists_generating_conjugate_all_classes(G, P, classes, 30, 99).to_json().dump();
  auto b = exists_generating_conjugate_all_classes(G, P, classes, 30, 99).to_json().dump();
  CHECK(a == b);
  CHECK(a.find("sylgen-mc-v1") != std::string::npos);
}

TEST_CASE("alternating obstruction")
{
  auto r = an_obstruction(15, 2, {3}, 1000, 1);
  CHECK(r.data["orb_P"] == 4);
  CHECK(r.data["orb_x"] == 13);
  CHECK(r.confirmed == 1000);
  CHECK(kind_of([] { an_obstruction(5, 2, {5}, 10, 1); }) == ErrorKind::InequalityFails);
  CHECK(kind_of([] { an_obstruction(6, 2, {2}, 10, 1); }) == ErrorKind::NotInGroup);

  // no sampled conjugate of a 3-cycle generates A15 with P
  auto G = classical::alternating_group(15);
  auto P = sylow::alternating_sylow(15, 2);
  auto x = perm::Perm::from_cycles(15, {{0, 1, 2}});
  auto mc = mc_generation(G, P, x, 40, 2);
  CHECK(!mc.witness);
  CHECK(mc.failures == 40);
}

TEST_CASE("SL5(2) obstruction")
{
  auto r = l52_obstruction(1000, 4);
  CHECK(r.data["dim_CV_y"] == 2);
  CHECK(r.data["dim_CV_x"] == 4);
  CHECK(r.data["min_common_dim"] >= 1);
  CHECK(r.confirmed == 1000);
}

TEST_CASE("irreducible transvection certificate")
{
  auto cert = irreducible_transvection_check();
  CHECK(cert.sylow_order == cert.expected_order);
  CHECK(cert.sylow_order == 8192);
  CHECK(cert.dims == std::vector<std::size_t>{4, 2, 1});
  REQUIRE(cert.verdicts.size() == 6);
  for (auto const &v : cert.verdicts)
    CHECK(!v.invariant);
  CHECK(cert.irreducible);
}
