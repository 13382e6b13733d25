#include "sylgen/audit/audit.hpp"

#include <algorithm>

#include "sylgen/algebra/counting.hpp"
#include "sylgen/error.hpp"

namespace sylgen::audit
{

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::CertifiedTrue:
    return "certified-true";
  case Verdict::CertifiedFalse:
    return "certified-false";
  default:
    return "undecided";
  }
}

namespace
{

using P = BoundParams;

bool odd_q(P const &p)
{
  return p.q >= 3 && p.q % 2 == 1 && is_prime_power(p.q);
}

Interval Q(P const &p)
{
  return Rational(from_u64(p.q));
}

Interval N(P const &p)
{
  return Rational(p.n);
}

Interval R(long a, long b = 1)
{
  return Rational(a, b);
}

Interval qpow(P const &p, long k)
{
  return ipow(Q(p), k);
}

// q^(k/2)
Interval qhalf(P const &p, long k, unsigned bits)
{
  return half_power(p.q, k, bits);
}

Interval loglog(P const &p, unsigned bits)
{
  return log2(log2(Q(p), bits), bits);
}

Interval logn(P const &p, unsigned bits)
{
  return log2(N(p), bits);
}

Interval delta_loglog(P const &p, unsigned bits)
{
  return p.q >= 27 ? loglog(p, bits) : Interval(0);
}

Interval imax(Interval const &a, Interval const &b)
{
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// a = q/(q-1), b = q^2/(q^2-1) style geometric sums
Interval geo(P const &p, long step)
{
  Interval qs = qpow(p, step);
  return qs / (qs - R(1));
}

bool has_odd_prime_exponent(std::uint64_t q)
{
  auto f = prime_power_decompose(q).f;
  for (unsigned d = 3; d <= f; d += 2)
    if (f % d == 0)
      return true;
  return false;
}

Interval p31_alpha(P const &p, unsigned bits)
{
  Interval ll = loglog(p, bits);
  Interval trans = R(2) * pow(Q(p), Interval(Rational(-2 * p.n, 3)), bits) * ll;
  Interval other = qpow(p, 4 - p.n) * ll;
  return imax(trans, other);
}

Interval p31_beta(P const &p, unsigned bits)
{
  Interval lg = log2(Interval(Rational(p.n / 2)), bits);
  Interval trans = R(4) / (qpow(p, p.n / 2) + R(1)) * lg;
  Interval other = p.n % 4 == 2 ? qpow(p, 4 - p.n) : qpow(p, 4 - p.n) * (lg - R(1)) + qpow(p, 6 - p.n);
  return imax(trans, other);
}

Interval p33(P const &p, unsigned bits)
{
  (void)bits;
  return R(1, 4) * N(p) * (R(2) * qpow(p, 2) + R(1)) * qhalf(p, -p.n, bits) + R(1) / (Q(p) - R(1)) +
         qpow(p, 2 * (p.n / 4) - p.n) * geo(p, 2);
}

Interval gk_sum(long lo, long hi)
{
  Rational s = 0;
  for (long i = lo; i <= hi; ++i)
    s += make_rational(1, bigpow(3, static_cast<unsigned>(i)));
  return Interval(Rational(4 * s));
}

std::vector<P> list1()
{
  return {{7, 3}, {7, 5}, {9, 3}};
}

std::vector<P> list2()
{
  return {{6, 3}, {6, 5}, {8, 3}, {8, 5}, {10, 3}};
}

std::vector<BoundEntry> build_registry()
{
  std::vector<BoundEntry> r;
  auto add = [&](BoundEntry e) { r.push_back(std::move(e)); };

  add({"ex-e8", "(5+log log q)q^{-8}(q^4-1)^{-1} < 1", "q", "q >= 3 odd", Relation::Less, 1, true,
       [](P const &p) { return odd_q(p); }, {},
       [](P const &p, unsigned b) {
         return (R(5) + loglog(p, b)) * qpow(p, -8) / (qpow(p, 4) - R(1));
       }});
  add({"ex-e6", "1/2(q+1)(4+log log q)(q^4-q^2+1)^{-1} < 1", "q", "q >= 3 odd", Relation::Less, 1, true,
       [](P const &p) { return odd_q(p); }, {},
       [](P const &p, unsigned b) {
         return R(1, 2) * (Q(p) + R(1)) * (R(4) + loglog(p, b)) / (qpow(p, 4) - qpow(p, 2) + R(1));
       }});
  add({"p1", "Sigma_1(x) < q^{(4-n)/2} log log q < 1/12", "n,q", "n >= 7 odd, q odd, (n,q) not in {(7,3),(7,5),(9,3)}",
       Relation::Less, Rational(1, 12), true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1 && odd_q(p); }, list1(),
       [](P const &p, unsigned b) { return qhalf(p, 4 - p.n, b) * loglog(p, b); }});
  add({"p1-sp62", "Sigma_1(x) < 3q^{(4-n)/2} < 1/12", "q", "n = 7, q = p = +-3 mod 8, q >= 11", Relation::Less,
       Rational(1, 12), true,
       [](P const &p) { return p.q >= 11 && is_prime(p.q) && (p.q % 8 == 3 || p.q % 8 == 5); }, {},
       [](P const &p, unsigned b) { return R(3) * half_power(p.q, -3, b); }});
  add({"p2", "Sigma_2(x) < (1/2(n-1)(2q+1)+q(q+1))q^{(1-n)/2}+q^{-3}+a+b < 11/12", "n,q",
       "n >= 7 odd, q odd, (n,q) not in {(7,3),(7,5),(9,3)}", Relation::Less, Rational(11, 12), true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1 && odd_q(p); }, list1(),
       [](P const &p, unsigned b) {
         Interval lead = R(1, 2) * (N(p) - R(1)) * (R(2) * Q(p) + R(1)) + Q(p) * (Q(p) + R(1));
         return lead * qhalf(p, 1 - p.n, b) + qpow(p, -3) + R(1) / (Q(p) - R(1)) + R(1) / (qpow(p, 2) - R(1));
       }});
  add({"p21", "Sigma_1(x) < q^{5-n}(delta log log q + 2 log n + 4) <= 1/22", "n,q",
       "n >= 8 even, q odd, (n,q) not in {(8,3),(8,5)}", Relation::LessEq, Rational(1, 22), true,
       [](P const &p) { return p.n >= 8 && p.n % 2 == 0 && odd_q(p); }, {{8, 3}, {8, 5}},
       [](P const &p, unsigned b) {
         return qpow(p, 5 - p.n) * (delta_loglog(p, b) + R(2) * logn(p, b) + R(4));
       }});
  add({"p22",
       "Sigma_2(x) < (n-1)(2q+1)q^{(2-n)/2}+2q^{-2}a+2q^{(2[n/4]+2-n)/2}a+2q^{(2[(n-2)/4]+2-n)/2}a+2(q^2-1)^{-1} < 21/22",
       "n,q", "n >= 8 even, q odd, (n,q) not in {(8,3),(8,5),(10,3),(12,3)}", Relation::Less, Rational(21, 22), true,
       [](P const &p) { return p.n >= 8 && p.n % 2 == 0 && odd_q(p); }, {{8, 3}, {8, 5}, {10, 3}, {12, 3}},
       [](P const &p, unsigned b) {
         Interval a = geo(p, 1);
         return (N(p) - R(1)) * (R(2) * Q(p) + R(1)) * qhalf(p, 2 - p.n, b) + R(2) * qpow(p, -2) * a +
                R(2) * qhalf(p, 2 * (p.n / 4) + 2 - p.n, b) * a +
                R(2) * qhalf(p, 2 * ((p.n - 2) / 4) + 2 - p.n, b) * a + R(2) / (qpow(p, 2) - R(1));
       }});
  add({"p31-alpha", "alpha(x) < 2q^{-2n/3} log log q < 1/200 and alpha(x) < q^{4-n} log log q < 1/200", "n,q",
       "n >= 6 even, q = q_0^e with e >= 3 prime, (n,q) not in {(6,3),(6,5),(8,3),(8,5),(10,3)}", Relation::Less,
       Rational(1, 200), true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p) && has_odd_prime_exponent(p.q); }, list2(),
       p31_alpha});
  add({"p31-beta", "beta(x) < (4/(q^{n/2}+1)) log(n/2) < 1/45, q^{4-n} < 1/45, q^{4-n}(log(n/2)-1)+q^{6-n}", "n,q",
       "n >= 6 even, q odd, (n,q) not in {(6,3),(6,5),(8,3),(8,5),(10,3)}", Relation::Less, Rational(1, 45), true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p); }, list2(), p31_beta});
  add({"p31-sum", "alpha(x)<1/200 and beta(x)<1/45, which implies that Sigma_1(x) < 1/43", "", "no parameters",
       Relation::Less, Rational(1, 43), false, [](P const &) { return true; }, {},
       [](P const &, unsigned) { return R(1, 200) + R(1, 45); }});
  add({"p33", "Sigma_2(x) < 1/4 n(2q^2+1)q^{-n/2}+1/(q-1)+q^{2[n/4]-n}(q^2/(q^2-1)) < 42/43", "n,q",
       "n >= 6 even, q odd, (n,q) not in {(6,3),(6,5),(8,3),(8,5),(10,3)}", Relation::Less, Rational(42, 43), true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p); }, list2(), p33});
  add({"p31-p33-total", "Sigma(x) = alpha(x)+beta(x)+Sigma_2(x) < 1, pointwise", "n,q",
       "n >= 6 even, q odd, (n,q) not in {(6,3),(6,5),(8,3),(8,5),(10,3)}", Relation::Less, 1, true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p); }, list2(),
       [](P const &p, unsigned b) { return p31_alpha(p, b) + p31_beta(p, b) + p33(p, b); }});
  add({"symp4", "Sigma(x) <= (2+log log q) 4/3q < 1", "q", "q >= 5 odd", Relation::Less, 1, true,
       [](P const &p) { return odd_q(p) && p.q >= 5; }, {},
       [](P const &p, unsigned b) { return (R(2) + loglog(p, b)) * R(4) / (R(3) * Q(p)); }});
  add({"psun-sigma1", "Sigma_1(x) < (delta log log q + log n)(1/2(q+1))^{log n - 1}q^{7/2-n} < 1/2", "n,q",
       "n >= 6, q odd, (n,q) != (6,3)", Relation::Less, Rational(1, 2), true,
       [](P const &p) { return p.n >= 6 && odd_q(p); }, {{6, 3}},
       [](P const &p, unsigned b) {
         Interval base = R(1, 2) * (Q(p) + R(1));
         return (delta_loglog(p, b) + logn(p, b)) * pow(base, logn(p, b) - R(1), b) * qhalf(p, 7 - 2 * p.n, b);
       }});
  add({"psun-sigma2-even", "Sigma_2(x) < (n/2-1)(2q^3+1)q^{1-n}+q^{2-n}+q^{-2}a+q^{-n/2-1}b < 1/2", "n,q",
       "n >= 6 even, q odd, (n,q) != (6,3)", Relation::Less, Rational(1, 2), true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p); }, {{6, 3}},
       [](P const &p, unsigned) {
         return (R(p.n / 2 - 1)) * (R(2) * qpow(p, 3) + R(1)) * qpow(p, 1 - p.n) + qpow(p, 2 - p.n) +
                qpow(p, -2) * geo(p, 2) + qpow(p, -p.n / 2 - 1) * geo(p, 1);
       }});
  add({"psun-sigma2-odd", "Sigma_2(x) < 1/2(n-1)(2q^3+1)q^{-n}+q^{1-n}+(q^{-2}+2q^{(1-n)/2})a < 1/2", "n,q",
       "n >= 7 odd, q odd", Relation::Less, Rational(1, 2), true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1 && odd_q(p); }, {},
       [](P const &p, unsigned b) {
         return R(1, 2) * (N(p) - R(1)) * (R(2) * qpow(p, 3) + R(1)) * qpow(p, -p.n) + qpow(p, 1 - p.n) +
                (qpow(p, -2) + R(2) * qhalf(p, 1 - p.n, b)) * geo(p, 2);
       }});
  add({"psln2-sigma1", "Sigma_1(x) < (delta log log q + log n)(1/2(q-1))^{log n - 1}q^{3-n} < 1/3", "n,q",
       "n >= 6, q odd, n even if q = 3, (n,q) != (6,3)", Relation::Less, Rational(1, 3), true,
       [](P const &p) { return p.n >= 6 && odd_q(p) && (p.q != 3 || p.n % 2 == 0); }, {{6, 3}},
       [](P const &p, unsigned b) {
         Interval base = R(1, 2) * (Q(p) - R(1));
         return (delta_loglog(p, b) + logn(p, b)) * pow(base, logn(p, b) - R(1), b) * qpow(p, 3 - p.n);
       }});
  add({"psln2-sigma2-even", "Sigma_2(x) < 4/(q(q-1)) <= 2/3", "n,q", "n >= 6 even, q odd, (n,q) != (6,3)",
       Relation::LessEq, Rational(2, 3), true,
       [](P const &p) { return p.n >= 6 && p.n % 2 == 0 && odd_q(p); }, {{6, 3}},
       [](P const &p, unsigned) { return R(4) / (Q(p) * (Q(p) - R(1))); }});
  add({"psln2-sigma2-odd", "Sigma_2(x) < 4/(q(q-1)) + 2(1/q+1/q^{n-1}) < 2/3", "n,q", "n >= 7 odd, q >= 5 odd",
       Relation::Less, Rational(2, 3), true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1 && odd_q(p) && p.q >= 5; }, {},
       [](P const &p, unsigned) {
         return R(4) / (Q(p) * (Q(p) - R(1))) + R(2) * (R(1) / Q(p) + qpow(p, 1 - p.n));
       }});
  add({"psl2", "Sigma_1(x) <= 4/(q+1) (q a square) and Sigma_2(x) <= 3(log log q+3) 4/3q, Sigma(x) < 1", "q",
       "q >= 101 odd", Relation::Less, 1, true, [](P const &p) { return odd_q(p) && p.q >= 101; }, {},
       [](P const &p, unsigned b) {
         Interval s2 = R(3) * (loglog(p, b) + R(3)) * R(4) / (R(3) * Q(p));
         auto f = prime_power_decompose(p.q).f;
         return f % 2 == 0 ? R(4) / (Q(p) + R(1)) + s2 : s2;
       }});
  add({"psln1-n3", "Sigma_1(x) < 1/2(q+1)q^{-2} log log q and Sigma_2(x) < (2+(q+1)/2) 4/3q, Sigma(x) < 1", "q",
       "n = 3, q >= 29 odd", Relation::Less, 1, true, [](P const &p) { return odd_q(p) && p.q >= 29; }, {},
       [](P const &p, unsigned b) {
         return R(1, 2) * (Q(p) + R(1)) * qpow(p, -2) * loglog(p, b) +
                (R(2) + (Q(p) + R(1)) / R(2)) * R(4) / (R(3) * Q(p));
       }});
  add({"psln1-n4", "Sigma(x) < (delta log log q + 6) 4/3q < 1", "q", "n = 4, q >= 11 odd", Relation::Less, 1, true,
       [](P const &p) { return odd_q(p) && p.q >= 11; }, {},
       [](P const &p, unsigned b) { return (delta_loglog(p, b) + R(6)) * R(4) / (R(3) * Q(p)); }});
  add({"psln1-n5", "Sigma_1(x) < 1/2(q+1)q^{-2}(delta log log q + 1) and Sigma_2(x) < 2 4/3q, Sigma(x) < 1", "q",
       "n = 5, q >= 9 odd", Relation::Less, 1, true, [](P const &p) { return odd_q(p) && p.q >= 9; }, {},
       [](P const &p, unsigned b) {
         return R(1, 2) * (Q(p) + R(1)) * qpow(p, -2) * (delta_loglog(p, b) + R(1)) + R(8) / (R(3) * Q(p));
       }});
  add({"psln3-tail", "4 sum_{i=2}^{(n-1)/2} 3^{-i} < 2/3", "n", "n >= 7 odd", Relation::Less, Rational(2, 3), true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1; }, {},
       [](P const &p, unsigned) { return gk_sum(2, (p.n - 1) / 2); }});
  add({"psln3-total", "Sigma(x) < 2/3 + 2((3^{n-2}-1)/(3^n-1)) < 1", "n", "n >= 7 odd", Relation::Less, 1, true,
       [](P const &p) { return p.n >= 7 && p.n % 2 == 1; }, {},
       [](P const &p, unsigned) {
         Rational cap = make_rational(bigpow(3, static_cast<unsigned>(p.n - 2)) - 1,
                                      bigpow(3, static_cast<unsigned>(p.n)) - 1);
         return gk_sum(2, (p.n - 1) / 2) + Interval(2 * cap);
       }});
  add({"remark-gk", "Sigma(x) < 4 sum_{m=1}^{(n-1)/2} 3^{-m}, which does not yield Sigma(x)<1", "n", "n >= 7 odd",
       Relation::Greater, 1, true, [](P const &p) { return p.n >= 7 && p.n % 2 == 1; }, {},
       [](P const &p, unsigned) { return gk_sum(1, (p.n - 1) / 2); }});
  return r;
}

std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi)
{
  std::vector<std::uint64_t> v;
  for (std::uint64_t q = lo | 1; q <= hi; q += 2)
    if (is_prime_power(q))
      v.push_back(q);
  return v;
}

} // namespace

std::vector<BoundEntry> const &registry()
{
  static std::vector<BoundEntry> const reg = build_registry();
  return reg;
}

BoundEntry const &find_bound(std::string const &id)
{
  for (auto const &e : registry())
    if (e.id == id)
      return e;
  throw Error(ErrorKind::UnknownBound, "no bound with id '" + id + "'");
}

Interval eval_bound(std::string const &id, BoundParams const &params, unsigned precision_bits)
{
  auto const &e = find_bound(id);
  if (!e.in_range(params))
    throw Error(ErrorKind::RangeViolation,
                id + ": (n,q) = (" + std::to_string(params.n) + "," + std::to_string(params.q) + ") outside " +
                    e.range);
  return e.eval(params, precision_bits);
}

Verdict verdict_of(BoundEntry const &entry, Interval const &v)
{
  Rational const &t = entry.threshold;
  switch (entry.relation) {
  case Relation::Less:
    if (v.hi < t)
      return Verdict::CertifiedTrue;
    if (v.lo >= t)
      return Verdict::CertifiedFalse;
    break;
  case Relation::LessEq:
    if (v.hi <= t)
      return Verdict::CertifiedTrue;
    if (v.lo > t)
      return Verdict::CertifiedFalse;
    break;
  case Relation::Greater:
    if (v.lo > t)
      return Verdict::CertifiedTrue;
    if (v.hi <= t)
      return Verdict::CertifiedFalse;
    break;
  }
  return Verdict::Undecided;
}

std::vector<BoundParams> default_grid(std::string const &id, GridCaps const &caps)
{
  auto const &e = find_bound(id);
  std::vector<BoundParams> grid;
  if (e.signature.empty()) {
    grid.push_back({});
  } else if (e.signature == "q") {
    for (auto q : odd_prime_powers(3, caps.q_max))
      grid.push_back({0, q});
  } else if (e.signature == "n") {
    for (long n = 2; n <= caps.n_max; ++n)
      grid.push_back({n, 0});
  } else {
    // small q densely, prime power towers and the largest prime up to the cap
    auto qs = odd_prime_powers(3, std::min<std::uint64_t>(243, caps.q_max));
    for (std::uint64_t p : {3, 5, 7, 11, 13})
      for (std::uint64_t q = p; q <= caps.q_max; q *= p)
        qs.push_back(q);
    for (std::uint64_t q = caps.q_max; q > 243; --q) {
      if (q % 2 == 1 && is_prime(q)) {
        qs.push_back(q);
        break;
      }
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (long n = 2; n <= caps.n_max; ++n)
      for (auto q : qs)
        grid.push_back({n, q});
  }
  std::vector<BoundParams> res;
  for (auto const &p : grid)
    if (e.in_range(p))
      res.push_back(p);
  return res;
}

AuditReport audit_range(std::string const &id, std::vector<BoundParams> const &grid, unsigned precision_bits)
{
  auto const &e = find_bound(id);
  AuditReport rep;
  rep.id = id;
  rep.quote = e.quote;
  for (auto const &p : grid) {
    AuditPoint pt;
    pt.params = p;
    pt.bits = precision_bits;
    pt.value = eval_bound(id, p, precision_bits);
    pt.verdict = verdict_of(e, pt.value);
    if (pt.verdict == Verdict::Undecided && precision_bits < 256) {
      pt.bits = 256;
      pt.value = eval_bound(id, p, 256);
      pt.verdict = verdict_of(e, pt.value);
    }
    pt.excluded = std::find(e.excluded.begin(), e.excluded.end(), p) != e.excluded.end();
    Verdict want = e.expect_true ? Verdict::CertifiedTrue : Verdict::CertifiedFalse;
    if (!pt.excluded && pt.verdict != want)
      rep.all_expected = false;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

nlohmann::json AuditReport::to_json() const
{
  auto const &e = find_bound(id);
  nlohmann::json j;
  j["schema"] = "sylgen-audit-v1";
  j["id"] = id;
  j["quote"] = quote;
  j["range"] = e.range;
  j["threshold"] = sylgen::to_string(e.threshold);
  j["relation"] = e.relation == Relation::Less ? "<" : e.relation == Relation::LessEq ? "<=" : ">";
  j["expect_true"] = e.expect_true;
  j["all_expected"] = all_expected;
  j["points"] = nlohmann::json::array();
  for (auto const &p : points) {
    nlohmann::json pj;
    if (e.signature.find('n') != std::string::npos)
      pj["n"] = p.params.n;
    if (e.signature.find('q') != std::string::npos)
      pj["q"] = p.params.q;
    pj["lower"] = sylgen::to_string(p.value.lo);
    pj["upper"] = sylgen::to_string(p.value.hi);
    pj["verdict"] = to_string(p.verdict);
    pj["bits"] = p.bits;
    pj["excluded"] = p.excluded;
    j["points"].push_back(pj);
  }
  return j;
}

FprInstance parabolic_instance(unsigned n, std::uint64_t q, unsigned d_minus, unsigned d_plus)
{
  if (d_minus + d_plus != n)
    throw Error(ErrorKind::RangeViolation, "eigenspace dimensions must sum to n");
  FprInstance inst;
  inst.name = "(" + std::to_string(n) + "," + std::to_string(q) + ",[" + std::to_string(d_minus) + "," +
              std::to_string(d_plus) + "])";
  inst.n = n;
  inst.q = q;
  for (unsigned m = 1; m < n; ++m)
    inst.values.emplace_back(m, make_rational(algebra::invariant_mspace_count(d_minus, d_plus, m, q),
                                              algebra::gauss_binom(n, m, q)));
  return inst;
}

FprInstance unipotent_instance(std::uint64_t q, std::vector<unsigned> const &jordan)
{
  auto pp = prime_power_decompose(q);
  FprInstance inst;
  inst.q = q;
  inst.name = "(" + std::to_string(q) + ",J[";
  for (auto b : jordan) {
    if (b == 0 || b > pp.p)
      throw Error(ErrorKind::RangeViolation, "Jordan block sizes must lie in 1..p");
    inst.n += b;
    inst.name += (inst.name.back() == '[' ? "" : ",") + std::to_string(b);
  }
  inst.name += "])";
  inst.unipotent_blocks = static_cast<unsigned>(jordan.size());
  if (inst.n < 2)
    throw Error(ErrorKind::RangeViolation, "dimension must be at least 2");
  // fixed 1-spaces lie in C_V(x), which has one dimension per block; same for the dual
  Rational f = make_rational(bigpow(from_u64(q), inst.unipotent_blocks) - 1, bigpow(from_u64(q), inst.n) - 1);
  inst.values.emplace_back(1, f);
  if (inst.n > 2)
    inst.values.emplace_back(inst.n - 1, f);
  return inst;
}

CrosscheckReport crosscheck_fpr_bound(std::string const &source, FprInstance const &inst)
{
  CrosscheckReport rep;
  rep.source = source;
  rep.instance = inst.name;
  bool any_applicable = false, violated = false;
  for (auto const &[m, value] : inst.values) {
    CrosscheckRow row;
    row.m = m;
    row.value = value;
    if (source == "gk-subspace") {
      row.bound = make_rational(2, bigpow(from_u64(inst.q), m));
      row.applicable = 2 * m < inst.n;
      row.dominated = value < row.bound;
    } else if (source == "ls91") {
      row.bound = make_rational(4, 3 * from_u64(inst.q));
      row.applicable = inst.q >= 5;
      row.dominated = value <= row.bound;
    } else if (source == "psln3-cap") {
      row.bound = make_rational(bigpow(3, inst.n - 2) - 1, bigpow(3, inst.n) - 1);
      row.applicable = inst.n >= 7 && inst.n % 2 == 1 && inst.q == 3 && (m == 1 || m == inst.n - 1) &&
                       inst.unipotent_blocks > 0 && inst.unipotent_blocks <= inst.n - 2;
      row.dominated = value <= row.bound;
    } else {
      throw Error(ErrorKind::UnknownBound, "no fpr bound source '" + source + "'");
    }
    any_applicable = any_applicable || row.applicable;
    violated = violated || (row.applicable && !row.dominated);
    rep.rows.push_back(row);
  }
  if (violated)
    throw Error(ErrorKind::BoundViolated, source + " bound fails on " + inst.name);
  if (any_applicable)
    rep.status = "dominated";
  else
    rep.status = source == "ls91" ? "recorded" : "out-of-range";
  return rep;
}

nlohmann::json CrosscheckReport::to_json() const
{
  nlohmann::json j;
  j["schema"] = "sylgen-audit-v1";
  j["source"] = source;
  j["instance"] = instance;
  j["status"] = status;
  j["rows"] = nlohmann::json::array();
  for (auto const &r : rows)
    j["rows"].push_back({{"m", r.m},
                         {"value", sylgen::to_string(r.value)},
                         {"bound", sylgen::to_string(r.bound)},
                         {"applicable", r.applicable},
                         {"dominated", r.dominated}});
  return j;
}

} // namespace sylgen::audit
