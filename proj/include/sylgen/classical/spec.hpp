#ifndef SYLGEN_CLASSICAL_SPEC_HPP
#define SYLGEN_CLASSICAL_SPEC_HPP

#include <cstdint>
#include <string>

#include "sylgen/algebra/numbers.hpp"

namespace sylgen::classical
{

enum class Family
{
  L,   // PSL
  U,   // PSU
  S,   // PSp
  A,   // alternating
  SL,  // matrix group SL
  SU,  // matrix group SU
  Sp,  // matrix group Sp
};

struct GroupSpec
{
  Family family = Family::L;
  unsigned n = 2;
  std::uint64_t q = 0; // 0 for alternating groups

  // +1 linear, -1 unitary, 0 otherwise
  int epsilon() const;
  bool projective() const;
  std::string str() const;

  bool operator==(GroupSpec const &) const = default;
};

// Grammar: L(n,q) U(n,q) S(n,q) A(n) SL(n,q) SU(n,q) Sp(n,q).
// ParseError names the offending token; orthogonal families give UnsupportedSpec.
GroupSpec parse_group_spec(std::string const &text);

// Orders of the matrix groups and their simple quotients.
BigInt order_sl(unsigned n, std::uint64_t q);
BigInt order_su(unsigned n, std::uint64_t q);
BigInt order_sp(unsigned n, std::uint64_t q);
// number of scalar matrices in SL, SU, Sp
std::uint64_t scalars_sl(unsigned n, std::uint64_t q);
std::uint64_t scalars_su(unsigned n, std::uint64_t q);
std::uint64_t scalars_sp(unsigned n, std::uint64_t q);

// |G| for the group the spec names (the simple quotient for L, U, S)
BigInt expected_order(GroupSpec const &spec);

} // namespace sylgen::classical

#endif // SYLGEN_CLASSICAL_SPEC_HPP
