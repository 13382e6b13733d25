#include "sylgen/classical/spec.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "sylgen/error.hpp"

namespace sylgen::classical
{

int GroupSpec::epsilon() const
{
  switch (family) {
    case Family::L:
    case Family::SL: return 1;
    case Family::U:
    case Family::SU: return -1;
    default: return 0;
  }
}

bool GroupSpec::projective() const
{
  return family == Family::L || family == Family::U || family == Family::S;
}

std::string GroupSpec::str() const
{
  std::string name;
  switch (family) {
    case Family::L: name = "L"; break;
    case Family::U: name = "U"; break;
    case Family::S: name = "S"; break;
    case Family::A: name = "A"; break;
    case Family::SL: name = "SL"; break;
    case Family::SU: name = "SU"; break;
    case Family::Sp: name = "Sp"; break;
  }
  if (family == Family::A)
    return name + "(" + std::to_string(n) + ")";
  return name + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

namespace
{

std::uint64_t parse_number(std::string const &tok, std::string const &text)
{
  if (tok.empty() || tok.size() > 18)
    throw Error(ErrorKind::ParseError, "bad number '" + tok + "' in '" + text + "'");
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ParseError, "bad number '" + tok + "' in '" + text + "'");
  }
  return std::stoull(tok);
}

} // namespace

GroupSpec parse_group_spec(std::string const &raw)
{
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      text += c;
  }

  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw Error(ErrorKind::ParseError, "expected NAME(args) but got '" + raw + "'");
  std::string name = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);

  std::vector<std::string> args;
  std::size_t start = 0;
  for (;;) {
    auto comma = inner.find(',', start);
    args.push_back(inner.substr(start, comma - start));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }

  GroupSpec spec;
  if (name == "L") spec.family = Family::L;
  else if (name == "U") spec.family = Family::U;
  else if (name == "S") spec.family = Family::S;
  else if (name == "A") spec.family = Family::A;
  else if (name == "SL") spec.family = Family::SL;
  else if (name == "SU") spec.family = Family::SU;
  else if (name == "Sp") spec.family = Family::Sp;
  else if (name == "O" || name == "SO" || name == "Omega" || name == "PO" || name == "POmega")
    throw Error(ErrorKind::UnsupportedSpec, "orthogonal family '" + name + "' is not constructed");
  else
    throw Error(ErrorKind::ParseError, "unknown family '" + name + "' in '" + raw + "'");

  std::size_t want = spec.family == Family::A ? 1 : 2;
  if (args.size() != want)
    throw Error(ErrorKind::ParseError, "family '" + name + "' takes " + std::to_string(want) +
                                       " arguments, got '" + inner + "'");

  std::uint64_t n = parse_number(args[0], raw);
  if (n < 2 || n > 64)
    throw Error(ErrorKind::ParseError, "dimension '" + args[0] + "' out of range");
  spec.n = static_cast<unsigned>(n);

  if (spec.family == Family::A) {
    if (spec.n < 3)
      throw Error(ErrorKind::ParseError, "degree '" + args[0] + "' too small");
    return spec;
  }

  spec.q = parse_number(args[1], raw);
  if (!is_prime_power(spec.q))
    throw Error(ErrorKind::ParseError, "field size '" + args[1] + "' is not a prime power");
  if ((spec.family == Family::S || spec.family == Family::Sp) && spec.n % 2 != 0)
    throw Error(ErrorKind::ParseError, "symplectic dimension '" + args[0] + "' must be even");
  if (spec.q % 2 == 0) {
    bool allowed = (spec.family == Family::L || spec.family == Family::SL) &&
                   ((spec.n == 2 && spec.q == 8) || (spec.n == 5 && spec.q == 2));
    if (!allowed)
      throw Error(ErrorKind::UnsupportedSpec, "even q only for L(2,8) and L(5,2), got '" + raw + "'");
  }
  return spec;
}

BigInt order_sl(unsigned n, std::uint64_t q)
{
  BigInt bq = from_u64(q);
  BigInt o = bigpow(bq, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    o *= bigpow(bq, i) - 1;
  return o;
}

BigInt order_su(unsigned n, std::uint64_t q)
{
  BigInt bq = from_u64(q);
  BigInt o = bigpow(bq, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    o *= bigpow(bq, i) - (i % 2 == 0 ? 1 : -1);
  return o;
}

BigInt order_sp(unsigned n, std::uint64_t q)
{
  unsigned m = n / 2;
  BigInt bq = from_u64(q);
  BigInt o = bigpow(bq, m * m);
  for (unsigned i = 1; i <= m; ++i)
    o *= bigpow(bq, 2 * i) - 1;
  return o;
}

std::uint64_t scalars_sl(unsigned n, std::uint64_t q)
{ return std::gcd<std::uint64_t>(n, q - 1); }

std::uint64_t scalars_su(unsigned n, std::uint64_t q)
{ return std::gcd<std::uint64_t>(n, q + 1); }

std::uint64_t scalars_sp(unsigned, std::uint64_t q)
{ return std::gcd<std::uint64_t>(2, q - 1); }

BigInt expected_order(GroupSpec const &s)
{
  switch (s.family) {
    case Family::L: return order_sl(s.n, s.q) / static_cast<unsigned long>(scalars_sl(s.n, s.q));
    case Family::U: return order_su(s.n, s.q) / static_cast<unsigned long>(scalars_su(s.n, s.q));
    case Family::S: return order_sp(s.n, s.q) / static_cast<unsigned long>(scalars_sp(s.n, s.q));
    case Family::SL: return order_sl(s.n, s.q);
    case Family::SU: return order_su(s.n, s.q);
    case Family::Sp: return order_sp(s.n, s.q);
    case Family::A: {
      BigInt f = 1;
      for (unsigned i = 3; i <= s.n; ++i)
        f *= i;
      return f;
    }
  }
  return 0;
}

} // namespace sylgen::classical
