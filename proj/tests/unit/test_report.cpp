#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "sylgen/classical/actions.hpp"
#include "sylgen/error.hpp"
#include "sylgen/generation/generation.hpp"
#include "sylgen/report/cli.hpp"
#include "sylgen/report/report.hpp"
#include "sylgen/sylow/sylow.hpp"

using namespace sylgen;
using namespace sylgen::report;
namespace fs = std::filesystem;

namespace
{

fs::path fresh_dir(std::string const &name)
{
  auto d = fs::temp_directory_path() / ("sylgen-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int run(std::vector<std::string> const &args, std::string *out = nullptr, std::string *err = nullptr)
{
  std::ostringstream o, e;
  int code = run_command(args, o, e);
  if (out)
    *out = o.str();
  if (err)
    *err = e.str();
  return code;
}

void walk_no_floats(nlohmann::json const &j)
{
  CHECK(!j.is_number_float());
  if (j.is_structured())
    for (auto const &v : j)
      walk_no_floats(v);
}

} // namespace

TEST_CASE("canonical serialization")
{
  nlohmann::json j = {{"zeta", 1}, {"alpha", {{"b", "1/2"}, {"a", "3"}}}};
  auto s = report_serialize(j);
  CHECK(s.find("\"alpha\"") < s.find("\"zeta\""));
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.back() == '\n');
  CHECK(report_serialize(nlohmann::json::parse(s)) == s);
  CHECK_THROWS_AS(report_serialize({{"x", 0.5}}), Error);
}

TEST_CASE("sigma report round trip and schema")
{
  auto C = classical::construct_group(classical::parse_group_spec("L(2,11)"));
  auto P = sylow::sylow_subgroup(C.group, 2, 1).P;
  auto rep = overgroup::sigma_table(C.group, P, "L(2,11)");
  auto s = report_serialize(rep.to_json());
  auto back = nlohmann::json::parse(s);
  CHECK(back == rep.to_json());
  CHECK(back["max_sigma"] == "51/55");
  CHECK(back["order"] == "660");
  walk_no_floats(back);
}

TEST_CASE("Monte Carlo reports are byte-identical for equal seeds")
{
  auto C = classical::construct_group(classical::parse_group_spec("L(2,7)"));
  auto P = sylow::sylow_subgroup(C.group, 2, 1).P;
  auto classes = perm::ConjClassTable::compute(C.group);
  auto a = generation::exists_generating_conjugate_all_classes(C.group, P, classes, 50, 9);
  auto b = generation::exists_generating_conjugate_all_classes(C.group, P, classes, 50, 9);
  CHECK(report_serialize(a.to_json()) == report_serialize(b.to_json()));
  walk_no_floats(a.to_json());
}

TEST_CASE("budget configuration")
{
  auto d = fresh_dir("cfg");
  {
    std::ofstream f(d / "b.cfg");
    f << "# caps\nsamples = 17\norbit_cap=5000\n; other comment\n";
  }
  auto b = load_budgets(d / "b.cfg");
  CHECK(b.samples == 17);
  CHECK(b.orbit_cap == 5000);
  CHECK(b.degree_cap == default_budgets().degree_cap);
  {
    std::ofstream f(d / "bad.cfg");
    f << "no_such_budget = 3\n";
  }
  CHECK_THROWS_AS(load_budgets(d / "bad.cfg"), Error);
  Budgets x;
  CHECK_THROWS_AS(set_budget(x, "samples", "-3"), Error);
  CHECK_THROWS_AS(set_budget(x, "samples", "12x"), Error);
  set_budget(x, "class_order_cap", "99");
  CHECK(x.class_order_cap == 99);
  fs::remove_all(d);
}

TEST_CASE("cache encoding rejects damage")
{
  auto C = classical::construct_group(classical::parse_group_spec("L(2,7)"));
  CacheEntry e;
  e.key = "L(2,7)|test";
  e.degree = C.group.degree();
  e.gens = C.group.generators();
  e.chain = C.group.chain();
  e.blocks = std::vector<perm::Block>{{0, 1}, {0, 2, 3}};
  auto bytes = encode_cache(e);
  CHECK(bytes.rfind("sylgen-cache-v1", 0) == 0);
  auto d = decode_cache(bytes);
  CHECK(d.key == e.key);
  CHECK(d.gens == e.gens);
  CHECK(d.blocks == e.blocks);
  auto G = perm::PermGroup::from_chain(d.gens, d.degree, d.chain);
  CHECK(G.order() == 168);
  for (std::size_t cut : {bytes.size() - 1, bytes.size() / 2, std::size_t(10)}) {
    try {
      decode_cache(bytes.substr(0, cut));
      CHECK(false);
    } catch (Error const &err) {
      CHECK(err.kind() == ErrorKind::ChecksumMismatch);
    }
  }
  auto flipped = bytes;
  flipped[flipped.size() / 2] ^= 1;
  CHECK_THROWS_AS(decode_cache(flipped), Error);
  auto old = bytes;
  old[14] = '0';
  CHECK_THROWS_AS(decode_cache(old), Error);
}

TEST_CASE("workspace cache round trip on S(4,3)")
{
  auto dir = fresh_dir("ws");
  Budgets b = default_budgets();
  std::vector<std::uint64_t> sizes;
  std::string sigma;
  BigInt order;
  std::vector<perm::Perm> probes;
  {
    Workspace w("S(4,3)", 1, b, Cache(dir));
    CHECK(!w.from_cache());
    order = w.G().order();
    for (auto const &c : w.classes().classes())
      sizes.push_back(c.size);
    sigma = to_string(overgroup::sigma_table(w.lattice(), w.classes()).max_sigma);
    Rng rng(3);
    for (int i = 0; i < 20; ++i)
      probes.push_back(w.G().random(rng));
    w.flush();
  }
  CHECK(order == 25920);
  CHECK(sizes.size() == 20);
  CHECK(sigma == "7/15");
  auto path = Cache(dir).path_for("S(4,3)|p=2|seed=1");
  REQUIRE(fs::exists(path));
  {
    Workspace w("S(4,3)", 1, b, Cache(dir));
    CHECK(w.from_cache());
    CHECK(w.G().order() == order);
    std::vector<std::uint64_t> again;
    for (auto const &c : w.classes().classes())
      again.push_back(c.size);
    CHECK(again == sizes);
    for (auto const &x : probes)
      CHECK(w.G().contains(x));
    auto l = perm::Perm::from_cycles(w.G().degree(), {{0, 1}});
    auto fresh = classical::construct_group(classical::parse_group_spec("S(4,3)")).group;
    CHECK(w.G().contains(l) == fresh.contains(l));
    CHECK(to_string(overgroup::sigma_table(w.lattice(), w.classes()).max_sigma) == sigma);
  }
  // truncate: recompute with a warning, same answers
  fs::resize_file(path, fs::file_size(path) / 3);
  {
    std::ostringstream warn;
    Workspace w("S(4,3)", 1, b, Cache(dir), &warn);
    CHECK(!w.from_cache());
    CHECK(warn.str().find("warning") != std::string::npos);
    CHECK(w.classes().size() == 20);
    CHECK(to_string(overgroup::sigma_table(w.lattice(), w.classes()).max_sigma) == sigma);
    w.flush();
  }
  {
    Workspace w("S(4,3)", 1, b, Cache(dir));
    CHECK(w.from_cache());
  }
  // an entry for another spec copied under this key's file name is never applied
  {
    Workspace other("L(2,7)", 1, b, Cache(dir));
    other.flush();
    fs::copy_file(Cache(dir).path_for("L(2,7)|p=2|seed=1"), path, fs::copy_options::overwrite_existing);
    std::ostringstream warn;
    Workspace w("S(4,3)", 1, b, Cache(dir), &warn);
    CHECK(!w.from_cache());
    CHECK(w.G().order() == 25920);
    CHECK(warn.str().find("keyed") != std::string::npos);
  }
  // a different Sylow seed is a different key
  CHECK(Cache(dir).path_for("S(4,3)|p=2|seed=2") != path);
  fs::remove_all(dir);
}

TEST_CASE("command exit codes")
{
  std::string out, err;
  CHECK(run({"order", "X(9,9)"}, &out, &err) == ExitUsage);
  CHECK(err.find("group spec grammar") != std::string::npos);
  CHECK(run({"frobnicate"}) == ExitUsage);
  CHECK(run({"order", "L(2,7)", "--bogus"}) == ExitUsage);
  CHECK(run({}) == ExitUsage);
  CHECK(run({"order", "L(2,7)", "--no-cache"}, &out) == ExitOk);
  CHECK(out.find("order    168") != std::string::npos);
  CHECK(run({"sigma", "L(2,11)", "--no-cache"}, &out) == ExitOk);
  std::string tail = "max Σ = 51/55\n";
  CHECK(out.substr(out.size() - tail.size()) == tail);
  CHECK(run({"sigma", "L(2,11)", "--no-cache", "--expect", "1/2"}) == ExitMismatch);
  CHECK(run({"sigma", "L(2,11)", "--no-cache", "--budget", "coset_degree_cap=10"}) == ExitBudget);
  CHECK(run({"sigma", "L(2,11)", "--no-cache", "--budget", "nope=1"}) == ExitUsage);
  CHECK(run({"sylow", "L(2,7)", "-p", "5", "--no-cache"}) == ExitUsage);
  CHECK(run({"audit", "p2", "--point", "8,3"}) == ExitUsage);
  CHECK(run({"audit", "unknown-id"}) == ExitUsage);
  CHECK(run({"obstruction", "an", "--n", "6", "--cycle", "2"}) == ExitUsage);
  CHECK(run({"parabolic", "7", "3", "6", "1"}, &out) == ExitOk);
  CHECK(out.find("Σ = 1086/1093") != std::string::npos);

  auto d = fresh_dir("cli");
  auto json = (d / "r.json").string();
  CHECK(run({"generate", "L(2,7)", "--no-cache", "--samples", "30", "--seed", "11", "-o", json}) == ExitOk);
  std::ifstream f(json);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  auto j = nlohmann::json::parse(bytes);
  CHECK(j["seed"] == "11");
  CHECK(j["command"] == "generate");
  CHECK(report_serialize(j) == bytes);
  fs::remove_all(d);
}
