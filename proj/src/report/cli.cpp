#include "sylgen/report/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "sylgen/audit/audit.hpp"
#include "sylgen/classical/actions.hpp"
#include "sylgen/error.hpp"
#include "sylgen/generation/generation.hpp"
#include "sylgen/report/report.hpp"
#include "sylgen/sylow/sylow.hpp"

namespace sylgen::report
{

namespace
{

constexpr char kGrammar[] = "group spec grammar: L(n,q) U(n,q) S(n,q) A(n) SL(n,q) SU(n,q) Sp(n,q)";

// raised when a computed value disagrees with a recorded one
struct Mismatch
{
  std::string what;
};

struct Common
{
  std::string output;
  std::string config;
  std::vector<std::string> budget;
  std::uint64_t seed = 1;
  std::uint64_t sylow_seed = 1;
  bool no_cache = false;
};

struct Ctx
{
  Common const &c;
  Budgets budgets;
  std::ostream &out;
  std::ostream &err;
  std::vector<std::string> mismatches;

  std::optional<Cache> cache() const
  {
    return c.no_cache ? std::nullopt : Cache::from_env();
  }

  Workspace workspace(std::string const &spec)
  {
    return Workspace(spec, c.sylow_seed, budgets, cache(), &err);
  }

  void check(bool ok, std::string const &what)
  {
    out << "check: " << what << (ok ? " ok" : " MISMATCH") << "\n";
    if (!ok)
      mismatches.push_back(what);
  }

  void emit(nlohmann::json doc, std::string const &verb)
  {
    doc["command"] = verb;
    doc["seed"] = std::to_string(c.seed);
    if (c.output.empty())
      return;
    std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
    if (!f)
      throw Error(ErrorKind::IoError, "cannot write " + c.output);
    f << report_serialize(doc);
  }
};

std::string pad(std::string s, std::size_t w)
{
  if (s.size() < w)
    s.insert(0, w - s.size(), ' ');
  return s;
}

std::string ratio_list(std::vector<Rational> const &v)
{
  std::string s;
  for (auto const &r : v)
    s += (s.empty() ? "" : " ") + to_string(r);
  return s;
}

// recorded values for the sigma verb: equality or an upper bound
std::optional<std::pair<Rational, bool>> recorded_sigma(classical::GroupSpec const &s)
{
  using classical::Family;
  if (s.family == Family::S && s.n == 4 && s.q == 3)
    return std::pair{Rational(7, 15), true};
  if (s.family == Family::L && s.n == 2 && s.q == 11)
    return std::pair{Rational(51, 55), true};
  if ((s.family == Family::L || s.family == Family::U) && s.n == 3 && s.q == 3)
    return std::pair{Rational(10, 13), false};
  if (s.family == Family::L && s.n == 2 && s.q % 2 == 1 && s.q >= 5)
    return std::pair{Rational(51, 55), false};
  return std::nullopt;
}

void cmd_order(Ctx &ctx, std::string const &spec)
{
  auto ws = ctx.workspace(spec);
  auto expected = classical::expected_order(ws.spec());
  ctx.out << "group    " << ws.spec().str() << "\n"
          << "degree   " << ws.G().degree() << "\n"
          << "order    " << to_string(ws.G().order()) << "\n"
          << "expected " << to_string(expected) << "\n";
  std::string base;
  for (auto b : ws.G().orbit_sizes())
    base += (base.empty() ? "" : " ") + std::to_string(b);
  ctx.out << "orbits   " << base << "\n";
  ctx.check(ws.G().order() == expected, "order matches the order formula");
  nlohmann::json j;
  j["schema"] = "sylgen-order-v1";
  j["group"] = ws.spec().str();
  j["degree"] = ws.G().degree();
  j["order"] = to_string(ws.G().order());
  j["expected_order"] = to_string(expected);
  j["basic_orbit_sizes"] = ws.G().orbit_sizes();
  ws.flush();
  ctx.emit(j, "order");
}

void cmd_sylow(Ctx &ctx, std::string const &spec, std::uint64_t p)
{
  nlohmann::json j;
  j["schema"] = "sylgen-sylow-v1";
  j["prime"] = p;
  perm::PermGroup P;
  std::string group;
  BigInt order;
  if (p == 2) {
    auto ws = ctx.workspace(spec);
    P = ws.P();
    group = ws.spec().str();
    order = ws.G().order();
    ws.flush();
  } else {
    auto gs = classical::parse_group_spec(spec);
    auto G = classical::construct_group(gs, ctx.budgets).group;
    P = sylow::sylow_subgroup(G, p, ctx.c.sylow_seed, ctx.budgets).P;
    group = gs.str();
    order = G.order();
  }
  BigInt ppart = 1, rest = order;
  while (rest % p == 0) {
    rest /= static_cast<unsigned long>(p);
    ppart *= static_cast<unsigned long>(p);
  }
  ctx.out << "group        " << group << "\n"
          << "order        " << to_string(order) << "\n"
          << "prime        " << p << "\n"
          << "sylow order  " << to_string(P.order()) << "\n"
          << "generators   " << P.generators().size() << "\n";
  ctx.check(P.order() == ppart, "|P| is the full p-part of |G|");
  j["group"] = group;
  j["order"] = to_string(order);
  j["sylow_order"] = to_string(P.order());
  j["p_part"] = to_string(ppart);
  j["sylow_seed"] = std::to_string(ctx.c.sylow_seed);
  nlohmann::json gens = nlohmann::json::array();
  for (auto const &g : P.generators())
    gens.push_back(g.images());
  j["generators"] = gens;
  ctx.emit(j, "sylow");
}

void cmd_normalizer(Ctx &ctx, std::string const &spec)
{
  auto ws = ctx.workspace(spec);
  auto rep = sylow::normalizer_of_sylow2(ws.G(), ws.P(), true, ctx.budgets);
  std::optional<BigInt> expected;
  try {
    expected = sylow::expected_normalizer_index(ws.spec());
  } catch (Error const &e) {
    if (e.kind() != ErrorKind::Uncovered)
      throw;
  }
  ctx.out << "group                " << ws.spec().str() << "\n"
          << "|P|                  " << to_string(ws.P().order()) << "\n"
          << "|N_G(P)|             " << to_string(rep.normalizer_order) << "\n"
          << "|N:P| fixed cosets   " << to_string(rep.index) << "\n"
          << "|N:P| orbit stab     " << (rep.orbit_index ? to_string(*rep.orbit_index) : "-") << "\n"
          << "|N:P| formula        " << (expected ? to_string(*expected) : "uncovered") << "\n";
  ctx.check(rep.match, "fixed-coset and orbit-stabilizer indices agree");
  if (expected)
    ctx.check(*expected == rep.index, "index matches the formula");
  nlohmann::json j;
  j["schema"] = "sylgen-normalizer-v1";
  j["group"] = ws.spec().str();
  j["sylow_order"] = to_string(ws.P().order());
  j["normalizer_order"] = to_string(rep.normalizer_order);
  j["index"] = to_string(rep.index);
  j["orbit_index"] = rep.orbit_index ? nlohmann::json(to_string(*rep.orbit_index)) : nlohmann::json(nullptr);
  j["expected"] = expected ? nlohmann::json(to_string(*expected)) : nlohmann::json(nullptr);
  j["match"] = rep.match && (!expected || *expected == rep.index);
  ws.flush();
  ctx.emit(j, "normalizer");
}

void cmd_overgroups(Ctx &ctx, std::string const &spec)
{
  auto ws = ctx.workspace(spec);
  auto const &lat = ws.lattice();
  ctx.out << "group " << ws.spec().str() << "  |G| = " << to_string(ws.G().order())
          << "  |P| = " << to_string(ws.P().order()) << "  |G:P| = " << lat.action().degree() << "\n";
  ctx.out << "  order    index  maximal\n";
  nlohmann::json j;
  j["schema"] = "sylgen-overgroups-v1";
  j["group"] = ws.spec().str();
  j["order"] = to_string(ws.G().order());
  j["sylow_order"] = to_string(ws.P().order());
  j["overgroups"] = nlohmann::json::array();
  for (auto const &H : lat.all()) {
    BigInt idx = ws.G().order() / H.order;
    ctx.out << pad(to_string(H.order), 7) << pad(to_string(idx), 9) << "  " << (H.maximal ? "yes" : "no") << "\n";
    j["overgroups"].push_back({{"order", to_string(H.order)}, {"index", to_string(idx)}, {"maximal", H.maximal}});
  }
  auto cl = overgroup::verify_count_lemma(lat);
  ctx.out << "count lemma: |N_G(P)| = " << to_string(cl.normalizer_order) << "\n";
  ctx.out << "  order  members  n(H,P)  |N_H(P)|  |N_G(P):N_H(P)|\n";
  for (auto const &r : cl.rows)
    ctx.out << pad(to_string(r.order), 7) << pad(std::to_string(r.members.size()), 9)
            << pad(std::to_string(r.observed), 8) << pad(to_string(r.normalizer_in_H), 10)
            << pad(to_string(r.predicted), 17) << "\n";
  ctx.check(cl.all_match, "n(H,P) = |N_G(P):N_H(P)| for every class");
  j["count_lemma"] = cl.to_json();
  ws.flush();
  ctx.emit(j, "overgroups");
}

void cmd_sigma(Ctx &ctx, std::string const &spec, std::string const &expect)
{
  auto ws = ctx.workspace(spec);
  auto rep = overgroup::sigma_table(ws.lattice(), ws.classes(), ws.spec().str());
  ctx.out << "group " << rep.group << "  |G| = " << to_string(rep.order) << "  |P| = " << to_string(rep.p_order)
          << "\n";
  std::string mx;
  for (std::size_t i = 0; i < rep.overgroup_orders.size(); ++i)
    if (rep.overgroup_maximal[i])
      mx += (mx.empty() ? "" : " ") + to_string(rep.overgroup_orders[i]);
  ctx.out << "maximal overgroups: " << mx << "\n";
  ctx.out << "class  order    size  sigma       fpr\n";
  for (auto const &r : rep.rows)
    ctx.out << pad(std::to_string(r.class_index), 5) << pad(std::to_string(r.order), 7)
            << pad(std::to_string(r.size), 8) << "  " << std::left << std::setw(10) << to_string(r.sigma)
            << std::right << "  " << ratio_list(r.fpr) << "\n";
  ctx.out << "max fpr = " << to_string(rep.max_fpr) << "\n";
  if (!expect.empty()) {
    Rational e(expect);
    e.canonicalize();
    ctx.check(rep.max_sigma == e, "max Σ equals " + to_string(e));
  } else if (auto rec = recorded_sigma(ws.spec())) {
    if (rec->second)
      ctx.check(rep.max_sigma == rec->first, "max Σ equals " + to_string(rec->first));
    else
      ctx.check(rep.max_sigma <= rec->first, "max Σ <= " + to_string(rec->first));
  }
  ctx.out << "max Σ = " << to_string(rep.max_sigma) << "\n";
  ws.flush();
  ctx.emit(rep.to_json(), "sigma");
}

void cmd_generate(Ctx &ctx, std::string const &spec, std::uint64_t samples, long cls)
{
  auto ws = ctx.workspace(spec);
  auto const &classes = ws.classes();
  generation::AllClassesReport all;
  if (cls >= 0) {
    if (cls == 0 || static_cast<std::size_t>(cls) >= classes.size())
      throw Error(ErrorKind::RangeViolation, "class index must lie in 1.." + std::to_string(classes.size() - 1));
    auto r = generation::mc_generation(ws.G(), ws.P(), classes.classes()[cls].rep, samples,
                                       Rng::derive(ctx.c.seed, static_cast<std::uint64_t>(cls)), ctx.budgets);
    r.class_index = static_cast<std::uint32_t>(cls);
    all.all_witnessed = r.witness.has_value();
    all.reports.push_back(std::move(r));
  } else {
    all = generation::exists_generating_conjugate_all_classes(ws.G(), ws.P(), classes, samples, ctx.c.seed,
                                                              ctx.budgets);
  }
  ctx.out << "group " << ws.spec().str() << "  samples/class = " << samples << "  seed = " << ctx.c.seed << "\n";
  ctx.out << "class  order  failures  witness\n";
  for (auto const &r : all.reports)
    ctx.out << pad(std::to_string(r.class_index), 5) << pad(std::to_string(classes.classes()[r.class_index].order), 7)
            << pad(std::to_string(r.failures), 10) << "  " << (r.witness ? "found" : "none") << "\n";
  ctx.check(all.all_witnessed, "every class has a generating conjugate");
  auto j = all.to_json();
  j["group"] = ws.spec().str();
  ws.flush();
  ctx.emit(j, "generate");
}

void cmd_obstruction(Ctx &ctx, std::string const &scenario, unsigned n, std::uint64_t p,
                     std::vector<unsigned> const &cycle, std::uint64_t samples)
{
  generation::ObstructionReport r;
  if (scenario == "an")
    r = generation::an_obstruction(n, p, cycle, samples, ctx.c.seed);
  else if (scenario == "l52")
    r = generation::l52_obstruction(samples, ctx.c.seed, ctx.budgets);
  else
    throw Error(ErrorKind::ParseError, "scenario must be 'an' or 'l52'");
  ctx.out << "scenario " << r.scenario << "\n";
  for (auto const &[k, v] : r.data)
    ctx.out << "  " << std::left << std::setw(16) << k << std::right << v << "\n";
  ctx.out << "confirmed " << r.confirmed << "/" << r.samples << "\n";
  ctx.check(r.confirmed == r.samples, "every sampled conjugate fails to generate");
  ctx.emit(r.to_json(), "obstruction");
}

void cmd_parabolic(Ctx &ctx, unsigned n, std::uint64_t q, unsigned dm, unsigned dp)
{
  auto inst = audit::parabolic_instance(n, q, dm, dp);
  auto s = overgroup::parabolic_sigma_semisimple(n, q, dm, dp);
  ctx.out << "L(" << n << "," << q << ")  x = diag(-I" << dm << ", I" << dp << ")\n";
  ctx.out << "  m  fpr\n";
  nlohmann::json rows = nlohmann::json::array();
  for (auto const &[m, f] : inst.values) {
    ctx.out << pad(std::to_string(m), 3) << "  " << to_string(f) << "\n";
    rows.push_back({{"m", m}, {"fpr", to_string(f)}});
  }
  if (n == 7 && q == 3 && dm == 6 && dp == 1)
    ctx.check(s == Rational(1086, 1093), "Σ equals 1086/1093");
  ctx.out << "Σ = " << to_string(s) << "\n";
  nlohmann::json j;
  j["schema"] = "sylgen-sigma-v1";
  j["instance"] = inst.name;
  j["fpr"] = rows;
  j["sigma"] = to_string(s);
  ctx.emit(j, "parabolic");
}

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, sep))
    v.push_back(t);
  return v;
}

void cmd_audit(Ctx &ctx, std::vector<std::string> ids, bool all, std::uint64_t q_max, long n_max, unsigned bits,
               std::vector<std::string> const &points, std::string const &crosscheck, std::string const &instance)
{
  if (!crosscheck.empty()) {
    auto parts = split(instance, ',');
    audit::FprInstance inst;
    if (parts.size() == 4) {
      inst = audit::parabolic_instance(std::stoul(parts[0]), std::stoull(parts[1]), std::stoul(parts[2]),
                                       std::stoul(parts[3]));
    } else if (instance.rfind("u:", 0) == 0) {
      auto qj = split(instance.substr(2), ':');
      if (qj.size() != 2)
        throw Error(ErrorKind::ParseError, "unipotent instance is u:q:j1,j2,...");
      std::vector<unsigned> jordan;
      for (auto const &b : split(qj[1], ','))
        jordan.push_back(std::stoul(b));
      inst = audit::unipotent_instance(std::stoull(qj[0]), jordan);
    } else {
      throw Error(ErrorKind::ParseError, "instance is n,q,d-,d+ or u:q:j1,j2,...");
    }
    auto rep = audit::crosscheck_fpr_bound(crosscheck, inst);
    ctx.out << "crosscheck " << rep.source << " on " << rep.instance << ": " << rep.status << "\n";
    ctx.out << "  m  value        bound        applicable  dominated\n";
    for (auto const &r : rep.rows)
      ctx.out << pad(std::to_string(r.m), 3) << "  " << std::left << std::setw(12) << to_string(r.value) << " "
              << std::setw(12) << to_string(r.bound) << " " << std::setw(11) << (r.applicable ? "yes" : "no")
              << " " << (r.dominated ? "yes" : "no") << std::right << "\n";
    ctx.emit(rep.to_json(), "audit");
    return;
  }
  if (all) {
    ids.clear();
    for (auto const &e : audit::registry())
      ids.push_back(e.id);
  }
  if (ids.empty())
    throw Error(ErrorKind::ParseError, "audit needs a bound id, --all or --crosscheck");
  audit::GridCaps caps{q_max, n_max};
  nlohmann::json reports = nlohmann::json::array();
  ctx.out << "id                  points  true  false  undecided  excluded  status\n";
  for (auto const &id : ids) {
    auto const &e = audit::find_bound(id);
    std::vector<audit::BoundParams> grid;
    if (points.empty()) {
      grid = audit::default_grid(id, caps);
    } else {
      for (auto const &pt : points) {
        auto nq = split(pt, ',');
        if (nq.size() != 2)
          throw Error(ErrorKind::ParseError, "point is n,q (use 0 for an unused parameter)");
        grid.push_back({std::stol(nq[0]), std::stoull(nq[1])});
      }
    }
    auto rep = audit::audit_range(id, grid, bits);
    std::size_t t = 0, f = 0, u = 0, x = 0;
    for (auto const &p : rep.points) {
      t += p.verdict == audit::Verdict::CertifiedTrue;
      f += p.verdict == audit::Verdict::CertifiedFalse;
      u += p.verdict == audit::Verdict::Undecided;
      x += p.excluded;
    }
    std::string status = rep.points.empty() ? "no grid points"
                         : rep.all_expected ? (e.expect_true ? "holds" : "fails as recorded")
                                            : "UNEXPECTED";
    ctx.out << std::left << std::setw(18) << id << std::right << pad(std::to_string(rep.points.size()), 8)
            << pad(std::to_string(t), 6) << pad(std::to_string(f), 7) << pad(std::to_string(u), 11)
            << pad(std::to_string(x), 10) << "  " << status << "\n";
    if (!rep.all_expected)
      ctx.mismatches.push_back("audit " + id);
    reports.push_back(rep.to_json());
  }
  ctx.out << "audited " << ids.size() << " entries: " << (ctx.mismatches.empty() ? "all as expected" : "MISMATCH")
          << "\n";
  nlohmann::json j;
  j["schema"] = "sylgen-audit-v1";
  j["reports"] = reports;
  ctx.emit(j, "audit");
}

void cmd_irreducible(Ctx &ctx)
{
  auto c = generation::irreducible_transvection_check();
  ctx.out << "SL(7,3) Sylow 2-subgroup order " << to_string(c.sylow_order) << " (2-part "
          << to_string(c.expected_order) << ")\n";
  std::string dims;
  for (auto d : c.dims)
    dims += (dims.empty() ? "" : ",") + std::to_string(d);
  ctx.out << "summand dims {" << dims << "}\n";
  for (auto const &v : c.verdicts) {
    std::string s;
    for (auto i : v.summands)
      s += (s.empty() ? "" : "+") + std::to_string(c.dims[i]);
    ctx.out << "  " << std::left << std::setw(8) << s << std::right << (v.invariant ? "invariant" : "not invariant")
            << "\n";
  }
  ctx.check(c.sylow_order == c.expected_order, "Sylow order is the 2-part");
  ctx.check(c.irreducible, "no candidate subspace is invariant");
  ctx.emit(c.to_json(), "irreducible-check");
}

int exit_for(ErrorKind k)
{
  switch (k) {
  case ErrorKind::BudgetExceeded:
  case ErrorKind::DegreeCap:
  case ErrorKind::SizeCap:
    return ExitBudget;
  case ErrorKind::ParseError:
  case ErrorKind::UnsupportedSpec:
  case ErrorKind::RangeViolation:
  case ErrorKind::UnknownBound:
  case ErrorKind::NotDivisor:
  case ErrorKind::NonPrime:
  case ErrorKind::InequalityFails:
  case ErrorKind::NotInGroup:
    return ExitUsage;
  default:
    return ExitInternal;
  }
}

} // namespace

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"sylgen: Sylow 2-subgroup generation tools"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App *s) {
    s->add_option("-o,--output", c.output, "write the JSON report here");
    s->add_option("--config", c.config, "key = value budget file")->check(CLI::ExistingFile);
    s->add_option("--budget", c.budget, "budget override key=value (repeatable)");
    s->add_option("--seed", c.seed, "random seed (default 1)");
    s->add_option("--sylow-seed", c.sylow_seed, "seed for the Sylow ascent (default 1)");
    s->add_flag("--no-cache", c.no_cache, "ignore SYLGEN_CACHE_DIR");
  };

  std::string spec, expect, scenario = "an", crosscheck, instance;
  std::uint64_t p = 2, samples = 0, q = 0, q_max = 59049;
  long cls = -1, n_max = 64;
  unsigned n = 15, nn = 0, dm = 0, dp = 0, bits = 64;
  std::vector<unsigned> cycle{3};
  std::vector<std::string> ids, points;
  bool all = false;

  std::map<std::string, CLI::App *> sub;
  auto with_spec = [&](std::string const &name, std::string const &desc) {
    auto *s = app.add_subcommand(name, desc);
    s->add_option("spec", spec, "group, e.g. S(4,3)")->required();
    add_common(s);
    sub[name] = s;
    return s;
  };
  with_spec("order", "order of the group from its generators");
  with_spec("sylow", "a Sylow p-subgroup")->add_option("-p,--prime", p, "prime (default 2)");
  with_spec("normalizer", "|N_G(P):P| for a Sylow 2-subgroup P, two ways and by formula");
  with_spec("overgroups", "overgroups of P and the counting lemma");
  with_spec("sigma", "the Σ table over maximal overgroups of P")
      ->add_option("--expect", expect, "exact expected max Σ, e.g. 7/15");
  auto *gen = with_spec("generate", "Monte Carlo search for x^g with <P, x^g> = G");
  gen->add_option("--samples", samples, "samples per class (default: budget 'samples')");
  gen->add_option("--class", cls, "only this class index");

  auto *obs = app.add_subcommand("obstruction", "conjugates that never generate with P");
  obs->add_option("scenario", scenario, "an or l52")->required();
  obs->add_option("--n", n, "degree for 'an' (default 15)");
  obs->add_option("-p,--prime", p, "prime for 'an' (default 2)");
  obs->add_option("--cycle", cycle, "cycle type of x for 'an' (default 3)");
  obs->add_option("--samples", samples, "sampled conjugates (default 1000)");
  add_common(obs);
  sub["obstruction"] = obs;

  auto *par = app.add_subcommand("parabolic", "Σ of diag(-I_a, I_b) in L(n,q) over the parabolic overgroups");
  par->add_option("n", nn)->required();
  par->add_option("q", q)->required();
  par->add_option("d_minus", dm)->required();
  par->add_option("d_plus", dp)->required();
  add_common(par);
  sub["parabolic"] = par;

  auto *aud = app.add_subcommand("audit", "certified evaluation of registered bounds");
  aud->add_option("id", ids, "bound ids");
  aud->add_flag("--all", all, "every registered bound");
  aud->add_option("--q-max", q_max, "grid cap on q (default 59049)");
  aud->add_option("--n-max", n_max, "grid cap on n (default 64)");
  aud->add_option("--bits", bits, "precision in bits (default 64, retried at 256)");
  aud->add_option("--point", points, "grid point n,q instead of the default grid (repeatable)");
  aud->add_option("--crosscheck", crosscheck, "fpr bound source: gk-subspace, ls91 or psln3-cap");
  aud->add_option("--instance", instance, "n,q,d-,d+ (parabolic) or u:q:j1,j2,... (unipotent)");
  add_common(aud);
  sub["audit"] = aud;

  auto *irr = app.add_subcommand("irreducible-check", "the all-ones transvection and the SL(7,3) Sylow 2-subgroup");
  add_common(irr);
  sub["irreducible-check"] = irr;

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    err << kGrammar << "\n";
    return ExitUsage;
  }

  std::string verb;
  for (auto const &[name, s] : sub)
    if (s->parsed())
      verb = name;

  try {
    Budgets budgets = default_budgets();
    if (!c.config.empty())
      budgets = load_budgets(c.config, budgets);
    for (auto const &kv : c.budget) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::ParseError, "budget override must be key=value");
      set_budget(budgets, kv.substr(0, eq), kv.substr(eq + 1));
    }
    Ctx ctx{c, budgets, out, err, {}};
    std::uint64_t per_class = samples ? samples : budgets.samples;
    if (verb == "order")
      cmd_order(ctx, spec);
    else if (verb == "sylow")
      cmd_sylow(ctx, spec, p);
    else if (verb == "normalizer")
      cmd_normalizer(ctx, spec);
    else if (verb == "overgroups")
      cmd_overgroups(ctx, spec);
    else if (verb == "sigma")
      cmd_sigma(ctx, spec, expect);
    else if (verb == "generate")
      cmd_generate(ctx, spec, per_class, cls);
    else if (verb == "obstruction")
      cmd_obstruction(ctx, scenario, n, p, cycle, samples ? samples : 1000);
    else if (verb == "parabolic")
      cmd_parabolic(ctx, nn, q, dm, dp);
    else if (verb == "audit")
      cmd_audit(ctx, ids, all, q_max, n_max, bits, points, crosscheck, instance);
    else if (verb == "irreducible-check")
      cmd_irreducible(ctx);
    if (!ctx.mismatches.empty()) {
      for (auto const &m : ctx.mismatches)
        err << "mismatch: " << m << "\n";
      return ExitMismatch;
    }
    return ExitOk;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    int code = exit_for(e.kind());
    if (code == ExitUsage)
      err << app.help();
    return code;
  } catch (std::invalid_argument const &e) {
    err << "error: bad number: " << e.what() << "\n" << kGrammar << "\n";
    return ExitUsage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return ExitInternal;
  }
}

} // namespace sylgen::report
