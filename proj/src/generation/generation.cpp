#include "sylgen/generation/generation.hpp"

#include <algorithm>
#include <numeric>

#include "sylgen/classical/actions.hpp"
#include "sylgen/classical/isotypic.hpp"
#include "sylgen/classical/matrix_groups.hpp"
#include "sylgen/classical/spec.hpp"
#include "sylgen/error.hpp"
#include "sylgen/sylow/sylow.hpp"

namespace sylgen::generation
{

using perm::Point;

bool generates_with(PermGroup const &G, PermGroup const &P, Perm const &y)
{
  auto gens = P.generators();
  gens.push_back(y);
  perm::BuildOptions opts;
  opts.order_bound = G.order();
  return PermGroup::from_generators(gens, G.degree(), opts).order() == G.order();
}

Rational MCReport::q_hat() const
{
  if (samples == 0)
    return 1;
  return make_rational(from_u64(failures), from_u64(samples));
}

nlohmann::json MCReport::to_json() const
{
  nlohmann::json j;
  j["schema"] = "sylgen-mc-v1";
  j["class"] = class_index;
  j["x"] = x.str();
  j["seed"] = std::to_string(seed);
  j["samples"] = samples;
  j["failures"] = failures;
  j["q_hat"] = to_string(q_hat());
  if (witness) {
    j["witness"] = {{"coordinates", witness->coordinates}, {"images", witness->g.images()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

MCReport mc_generation(PermGroup const &G, PermGroup const &P, Perm const &x, std::uint64_t samples,
                       std::uint64_t seed, Budgets const &budgets)
{
  (void)budgets;
  MCReport r;
  r.x = x;
  r.seed = seed;
  r.samples = samples;
  Rng rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    Perm g = G.random(rng);
    if (generates_with(G, P, x.conjugate(g))) {
      if (!r.witness)
        r.witness = Witness{G.coordinates(g), g};
    } else {
      ++r.failures;
    }
  }
  return r;
}

bool verify_witness(PermGroup const &G, PermGroup const &P, Perm const &x, nlohmann::json const &report)
{
  if (!report.contains("witness") || report["witness"].is_null())
    return false;
  auto coords = report["witness"]["coordinates"].get<std::vector<std::uint32_t>>();
  Perm g = G.from_coordinates(coords);
  Perm stored(report["witness"]["images"].get<std::vector<Point>>());
  return g == stored && generates_with(G, P, x.conjugate(g));
}

nlohmann::json AllClassesReport::to_json() const
{
  nlohmann::json j;
  j["schema"] = "sylgen-mc-v1";
  j["all_witnessed"] = all_witnessed;
  j["classes"] = nlohmann::json::array();
  for (auto const &r : reports)
    j["classes"].push_back(r.to_json());
  return j;
}

AllClassesReport exists_generating_conjugate_all_classes(PermGroup const &G, PermGroup const &P,
                                                         perm::ConjClassTable const &classes,
                                                         std::uint64_t samples_per_class, std::uint64_t seed,
                                                         Budgets const &budgets)
{
  AllClassesReport all;
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    auto const &rep = classes.classes()[c].rep;
    if (rep.is_identity())
      continue;
    auto r = mc_generation(G, P, rep, samples_per_class, Rng::derive(seed, c), budgets);
    r.class_index = c;
    all.all_witnessed = all.all_witnessed && r.witness.has_value();
    all.reports.push_back(std::move(r));
  }
  return all;
}

nlohmann::json ObstructionReport::to_json() const
{
  nlohmann::json j;
  j["schema"] = "sylgen-mc-v1";
  j["scenario"] = scenario;
  j["data"] = data;
  j["seed"] = std::to_string(seed);
  j["samples"] = samples;
  j["confirmed"] = confirmed;
  return j;
}

ObstructionReport an_obstruction(unsigned n, std::uint64_t p, std::vector<unsigned> const &cycle_type,
                                 std::uint64_t samples, std::uint64_t seed)
{
  if (n < 3)
    throw Error(ErrorKind::RangeViolation, "n must be at least 3");
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point(0));
  Point next = 0;
  unsigned moved_minus_cycles = 0;
  for (unsigned len : cycle_type) {
    if (len < 2 || next + len > n)
      throw Error(ErrorKind::RangeViolation, "cycle type does not fit in degree n");
    for (unsigned i = 0; i < len; ++i)
      img[next + i] = next + (i + 1) % len;
    next += len;
    moved_minus_cycles += len - 1;
  }
  if (moved_minus_cycles % 2)
    throw Error(ErrorKind::NotInGroup, "cycle type is odd");
  Perm x(std::move(img));

  auto G = classical::alternating_group(n);
  auto P = sylow::alternating_sylow(n, p);
  std::int64_t orb_p = static_cast<std::int64_t>(perm::orbit_count(P.generators(), n));
  std::int64_t orb_x = static_cast<std::int64_t>(n - moved_minus_cycles);

  ObstructionReport r;
  r.scenario = "A" + std::to_string(n) + "-p" + std::to_string(p);
  r.data = {{"n", n}, {"p", static_cast<std::int64_t>(p)}, {"orb_P", orb_p}, {"orb_x", orb_x}};
  if (orb_x <= static_cast<std::int64_t>(n) - orb_p)
    throw Error(ErrorKind::InequalityFails, "orb(x) = " + std::to_string(orb_x) + " <= n - orb(P) = " +
                                                std::to_string(n - orb_p));
  r.seed = seed;
  r.samples = samples;
  Rng rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    auto gens = P.generators();
    gens.push_back(x.conjugate(G.random(rng)));
    r.confirmed += perm::orbit_of(gens, 0).size() < n;
  }
  return r;
}

ObstructionReport l52_obstruction(std::uint64_t samples, std::uint64_t seed, Budgets const &budgets)
{
  auto C = classical::construct_group(classical::parse_group_spec("L(5,2)"), budgets);
  auto const &G = C.group;
  auto const &dom = *C.domain;
  auto F = C.matrices->field;
  unsigned n = 5;

  auto P = sylow::sylow_subgroup(G, 7, seed, budgets).P;
  std::optional<Perm> y;
  for (auto const &g : P.generators())
    if (g.order() == 7)
      y = g;
  if (!y)
    throw Error(ErrorKind::ConstructionFailed, "no element of order 7");

  // points are the nonzero vectors of GF(2)^5
  auto fixed_set = [&](Perm const &g) {
    std::vector<char> f(dom.size());
    for (Point i = 0; i < dom.size(); ++i)
      f[i] = g[i] == i;
    return f;
  };
  auto dim_of = [](std::size_t nonzero) {
    unsigned d = 0;
    while ((std::size_t(1) << d) < nonzero + 1)
      ++d;
    if ((std::size_t(1) << d) != nonzero + 1)
      throw Error(ErrorKind::ConstructionFailed, "fixed set is not a subspace");
    return d;
  };
  auto count = [](std::vector<char> const &f) { return std::size_t(std::count(f.begin(), f.end(), 1)); };

  // matrix of y recovered from the images of the basis vectors
  algebra::Matrix Y(F, n);
  for (unsigned i = 0; i < n; ++i) {
    algebra::Vector e(n, F->zero());
    e[i] = F->one();
    auto const &img = dom.points()[(*y)[dom.index_of(e)]];
    for (unsigned j = 0; j < n; ++j)
      Y(i, j) = img[j];
  }
  auto fy = fixed_set(*y);
  unsigned dim_y = dim_of(count(fy));
  if (dim_y != n - (Y - algebra::Matrix::identity(F, n)).rank())
    throw Error(ErrorKind::ConstructionFailed, "fixed space dimension mismatch");

  algebra::Matrix T = algebra::Matrix::identity(F, n);
  T(0, 1) = F->one();
  Perm x = dom.perm_of(T);
  unsigned dim_x = dim_of(count(fixed_set(x)));

  ObstructionReport r;
  r.scenario = "SL5(2)-p7";
  r.seed = seed;
  r.samples = samples;
  std::int64_t min_common = n;
  Rng rng(Rng::derive(seed, 1));
  for (std::uint64_t k = 0; k < samples; ++k) {
    auto fx = fixed_set(x.conjugate(G.random(rng)));
    std::size_t common = 0;
    for (std::size_t i = 0; i < fx.size(); ++i)
      common += fx[i] && fy[i];
    std::int64_t d = dim_of(common);
    min_common = std::min(min_common, d);
    r.confirmed += d >= 1 && d >= static_cast<std::int64_t>(dim_x + dim_y) - static_cast<std::int64_t>(n);
  }
  r.data = {{"n", n}, {"r", 7}, {"dim_CV_y", dim_y}, {"dim_CV_x", dim_x}, {"min_common_dim", min_common}};
  return r;
}

nlohmann::json IrreducibilityCertificate::to_json() const
{
  nlohmann::json j;
  j["sylow_order"] = to_string(sylow_order);
  j["expected_order"] = to_string(expected_order);
  j["dims"] = dims;
  j["irreducible"] = irreducible;
  j["candidates"] = nlohmann::json::array();
  for (auto const &v : verdicts)
    j["candidates"].push_back({{"summands", v.summands}, {"invariant", v.invariant}});
  return j;
}

IrreducibilityCertificate irreducible_transvection_check()
{
  unsigned n = 7;
  auto P = classical::sl_sylow2_matrices(n);
  auto F = P.field;
  IrreducibilityCertificate cert;

  std::vector<algebra::Vector> basis;
  for (unsigned i = 0; i < n; ++i) {
    algebra::Vector e(n, F->zero());
    e[i] = F->one();
    basis.push_back(e);
  }
  auto dom = classical::VectorDomain::orbits(P.gens, basis);
  std::vector<Perm> perms;
  for (auto const &g : P.gens)
    perms.push_back(dom.perm_of(g));
  cert.sylow_order = PermGroup::from_generators(perms, dom.size()).order();
  cert.expected_order = p_part(classical::order_sl(n, 3), 2);

  auto dec = classical::isotypic_summands(P);
  cert.dims = dec.dims();
  if (cert.dims != std::vector<std::size_t>{4, 2, 1})
    throw Error(ErrorKind::DecompositionMismatch, "summand dimensions differ from {4,2,1}");

  auto y = classical::transvection_allones(n);
  bool any_invariant = false;
  for (unsigned mask = 1; mask < 7; ++mask) {
    SubsetVerdict v;
    algebra::Subspace W = algebra::Subspace::span(F, n, {});
    for (unsigned i = 0; i < 3; ++i) {
      if (mask >> i & 1) {
        v.summands.push_back(i);
        W = W.sum(dec.summands[i].space);
      }
    }
    v.invariant = W.invariant_under(y);
    any_invariant = any_invariant || v.invariant;
    cert.verdicts.push_back(v);
  }
  cert.irreducible = !any_invariant && cert.sylow_order == cert.expected_order;
  return cert;
}

} // namespace sylgen::generation
