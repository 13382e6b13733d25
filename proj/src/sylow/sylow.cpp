#include "sylgen/sylow/sylow.hpp"

#include <numeric>

#include "sylgen/error.hpp"
#include "sylgen/perm/conjugacy.hpp"
#include "sylgen/perm/coset_action.hpp"

namespace sylgen::sylow
{

using perm::Perm;
using perm::Point;

SylowData sylow_subgroup(PermGroup const &G, std::uint64_t p, std::uint64_t seed, Budgets const &budgets)
{
  BigInt target = p_part(G.order(), p);
  if (target == 1)
    throw Error(ErrorKind::NotDivisor, std::to_string(p) + " does not divide |G|");

  Rng rng(seed);
  std::size_t D = G.degree();
  std::vector<Perm> gens;
  PermGroup Q = PermGroup::trivial(D);
  perm::BuildOptions opts;
  opts.budgets = budgets;
  opts.order_bound = target;

  while (Q.order() < target) {
    PermGroup N = gens.empty() ? G : perm::conj_orbit_stabilizer(G, Q, budgets).normalizer;
    bool grown = false;
    for (std::uint64_t k = 0; k < budgets.sylow_samples && !grown; ++k) {
      Perm y = perm::element_ppart(N.random(rng), p);
      if (y.is_identity() || Q.contains(y))
        continue;
      gens.push_back(y);
      Q = PermGroup::from_generators(gens, D, opts);
      grown = true;
    }
    if (!grown)
      throw Error(ErrorKind::BudgetExceeded, "no p-element outside Q within the sample budget");
  }
  return {p, std::move(Q)};
}

PermGroup alternating_sylow(unsigned n, std::uint64_t p)
{
  // S_n Sylow: for each base-p digit c of n at p^a, c blocks with the
  // iterated wreath product C_p wr ... wr C_p of depth a
  std::vector<Perm> gens;
  Point offset = 0;
  std::uint64_t power = 1;
  unsigned depth = 0;
  while (power * p <= n) {
    power *= p;
    ++depth;
  }
  std::uint64_t rest = n;
  for (; power >= 1; power /= p, --depth) {
    std::uint64_t c = rest / power;
    rest %= power;
    for (std::uint64_t copy = 0; copy < c; ++copy) {
      std::uint64_t sub = 1;
      for (unsigned j = 0; j < depth; ++j, sub *= p) {
        // rotate the p sub-blocks of size sub inside the first p * sub points
        std::vector<Point> img(n);
        std::iota(img.begin(), img.end(), Point(0));
        for (std::uint64_t i = 0; i < p * sub; ++i)
          img[offset + i] = static_cast<Point>(offset + (i + sub) % (p * sub));
        gens.emplace_back(std::move(img));
      }
      offset += static_cast<Point>(power);
    }
    if (power == 1)
      break;
  }

  // even part: Schreier generators for the sign kernel with transversal {1, t}
  std::optional<Perm> t;
  for (auto const &g : gens) {
    if (!g.is_even()) {
      t = g;
      break;
    }
  }
  std::vector<Perm> even;
  if (!t) {
    even = gens;
  } else {
    Perm tinv = t->inverse();
    for (auto const &g : gens) {
      if (g.is_even()) {
        even.push_back(g);
        even.push_back(*t * g * tinv);
      } else {
        even.push_back(g * tinv);
        even.push_back(*t * g);
      }
    }
  }
  std::vector<Perm> uniq;
  for (auto const &g : even) {
    if (g.is_identity())
      continue;
    bool dup = false;
    for (auto const &h : uniq)
      dup = dup || h == g;
    if (!dup)
      uniq.push_back(g);
  }
  return PermGroup::from_generators(uniq, n);
}

std::optional<Perm> sylow_conjugator(PermGroup const &G, PermGroup const &P1, PermGroup const &P2,
                                     Budgets const &budgets)
{
  if (P1.order() != P2.order())
    return std::nullopt;
  perm::CosetAction act(G, P1, budgets);
  std::vector<Perm> imgs;
  for (auto const &y : P2.generators())
    imgs.push_back(act.action_of(y));
  for (std::uint32_t c = 0; c < act.degree(); ++c) {
    bool fixed = true;
    for (auto const &m : imgs)
      fixed = fixed && m[c] == c;
    if (!fixed)
      continue;
    Perm r = act.reps()[c];
    for (auto const &y : P2.generators())
      if (!P1.contains(y.conjugate(r.inverse())))
        return std::nullopt;
    return r;
  }
  return std::nullopt;
}

NormalizerReport normalizer_of_sylow2(PermGroup const &G, PermGroup const &P, bool cross_check,
                                      Budgets const &budgets)
{
  perm::CosetAction act(G, P, budgets);
  NormalizerReport r;
  r.index = static_cast<unsigned long>(act.fixed_by_subgroup().size());
  r.normalizer_order = r.index * P.order();
  if (cross_check) {
    auto res = perm::conj_orbit_stabilizer(G, P, budgets);
    r.orbit_index = res.normalizer.order() / P.order();
    r.match = *r.orbit_index == r.index;
  }
  return r;
}

std::pair<unsigned, std::uint64_t> binary_digits_and_oddpart(std::uint64_t n)
{
  if (n == 0)
    throw Error(ErrorKind::RangeViolation, "n must be positive");
  unsigned t = static_cast<unsigned>(__builtin_popcountll(n));
  while (n % 2 == 0)
    n /= 2;
  return {t, n};
}

BigInt expected_normalizer_index(classical::GroupSpec const &spec)
{
  using classical::Family;
  std::uint64_t q = spec.q;
  if (spec.family == Family::L && spec.n == 2 && q == 8)
    return 7; // L_2(8) = 2G_2(3)'
  if (!spec.projective() || q % 2 == 0)
    throw Error(ErrorKind::Uncovered, "no normalizer formula for " + spec.str());

  bool rank_one = spec.n == 2 && (spec.family == Family::L || spec.family == Family::U);
  if (spec.family == Family::S || rank_one) {
    if (q % 8 == 3 || q % 8 == 5)
      return bigpow(3, binary_digits_and_oddpart(spec.n).first);
    return 1;
  }

  auto [t, odd_unused] = binary_digits_and_oddpart(spec.n);
  (void)odd_unused;
  if (t < 2)
    return 1;
  std::uint64_t qe = spec.family == Family::L ? q - 1 : q + 1;
  std::uint64_t num = binary_digits_and_oddpart(qe).second;
  std::uint64_t den = binary_digits_and_oddpart(std::gcd<std::uint64_t>(spec.n, qe)).second;
  BigInt value = bigpow(BigInt(static_cast<unsigned long>(num)), t - 1);
  if (value % static_cast<unsigned long>(den) != 0)
    throw Error(ErrorKind::ConstructionFailed, "normalizer formula is not integral");
  return value / static_cast<unsigned long>(den);
}

} // namespace sylgen::sylow
