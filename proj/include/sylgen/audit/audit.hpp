#ifndef SYLGEN_AUDIT_AUDIT_HPP
#define SYLGEN_AUDIT_AUDIT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sylgen/audit/interval.hpp"

namespace sylgen::audit
{

struct BoundParams
{
  long n = 0;
  std::uint64_t q = 0;

  bool operator==(BoundParams const &o) const
  { return n == o.n && q == o.q; }
};

enum class Relation
{
  Less,
  LessEq,
  Greater,
};

enum class Verdict
{
  CertifiedTrue,
  CertifiedFalse,
  Undecided,
};

std::string to_string(Verdict v);

struct GridCaps
{
  std::uint64_t q_max = 59049;  // 3^10
  long n_max = 64;
};

struct BoundEntry
{
  std::string id;
  std::string quote;
  std::string signature;  // "q", "n", "n,q" or "" (no parameters)
  std::string range;
  Relation relation = Relation::Less;
  Rational threshold;
  // false for printed inequalities recorded as not holding
  bool expect_true = true;
  std::function<bool(BoundParams const &)> in_range;
  std::vector<BoundParams> excluded;
  std::function<Interval(BoundParams const &, unsigned)> eval;
};

std::vector<BoundEntry> const &registry();
// throws UnknownBound
BoundEntry const &find_bound(std::string const &id);

// throws RangeViolation outside the entry's stated range
Interval eval_bound(std::string const &id, BoundParams const &params, unsigned precision_bits = 64);
Verdict verdict_of(BoundEntry const &entry, Interval const &value);

std::vector<BoundParams> default_grid(std::string const &id, GridCaps const &caps = {});

struct AuditPoint
{
  BoundParams params;
  Interval value;
  Verdict verdict = Verdict::Undecided;
  unsigned bits = 0;
  bool excluded = false;
};

struct AuditReport
{
  std::string id;
  std::string quote;
  std::vector<AuditPoint> points;
  // every non-excluded point has the expected certified verdict
  bool all_expected = true;

  nlohmann::json to_json() const;
};

// points are evaluated at precision_bits and retried at 256 if undecided
AuditReport audit_range(std::string const &id, std::vector<BoundParams> const &grid,
                        unsigned precision_bits = 64);

struct FprInstance
{
  std::string name;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::vector<std::pair<unsigned, Rational>> values;  // (subspace dimension m, exact fpr)
  // unipotent of order p with this many Jordan blocks; 0 for other elements
  unsigned unipotent_blocks = 0;
};

// exact fprs of a semisimple element with eigenspaces of dimensions d_minus,
// d_plus on the m-space stabilizers, m = 1..n-1
FprInstance parabolic_instance(unsigned n, std::uint64_t q, unsigned d_minus, unsigned d_plus);
// exact fprs on 1-spaces and hyperplanes of a unipotent element with the
// given Jordan block sizes, all at most p
FprInstance unipotent_instance(std::uint64_t q, std::vector<unsigned> const &jordan);

struct CrosscheckRow
{
  unsigned m = 0;
  Rational value;
  Rational bound;
  bool applicable = false;
  bool dominated = false;
};

struct CrosscheckReport
{
  std::string source;
  std::string instance;
  std::string status;  // "dominated", "recorded" or "out-of-range"
  std::vector<CrosscheckRow> rows;

  nlohmann::json to_json() const;
};

// sources: "gk-subspace" (fpr(x,G/P_m) < 2 q^-m for m < n/2), "ls91"
// (fpr <= 4/3q, asserted only for q >= 5), "psln3-cap" (1-space and
// hyperplane stabilizers, n >= 7 odd, q = 3). Throws BoundViolated when an
// applicable bound fails, UnknownBound for other sources.
CrosscheckReport crosscheck_fpr_bound(std::string const &source, FprInstance const &instance);

} // namespace sylgen::audit

#endif // SYLGEN_AUDIT_AUDIT_HPP
