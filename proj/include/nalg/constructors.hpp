#pragma once

#include <string>
#include <vector>

#include "nalg/magma.hpp"

namespace nalg {

// The loop family L_n(m) on {e, 1..n}: n odd > 3, 1 < m < n,
// gcd(m, n) = gcd(m-1, n) = 1.
struct LoopFamilySpec {
  int n = 0, m = 0;
  void validate() const;  // throws error("inadmissible-spec: ...") naming the failing condition
};

enum class GroupoidFamily { Z, Zstar, Zstarstar, Zfull };
std::string_view groupoid_family_name(GroupoidFamily f);
GroupoidFamily groupoid_family_from_name(std::string_view s);

// Z_n(t, u): a*b = ta + ub mod n. The families differ in the constraints
// on (t, u).
struct GroupoidFamilySpec {
  int n = 0, t = 0, u = 0;
  GroupoidFamily family = GroupoidFamily::Zstar;
  void validate() const;  // throws error("family-constraint-violation: ...")
};

Magma build_loop_ln(const LoopFamilySpec& spec);

std::vector<int> enumerate_ln(int n);
long count_ln(int n);                         // prod (p_i - 2) p_i^(a_i - 1)
long count_strictly_noncommutative(int n);    // prod (p_i - 3) p_i^(a_i - 1)
long count_strictly_nonalternative(int n);    // same closed form

// Direct scans used as the formula cross-checks.
bool is_strictly_noncommutative(const Magma& m);
bool is_strictly_nonalternative(const Magma& m, Side side);

Magma build_groupoid_zn(const GroupoidFamilySpec& spec);
long count_groupoid_family(int n, GroupoidFamily family);
std::vector<std::pair<int, int>> enumerate_groupoid_family(int n, GroupoidFamily family);

enum class ClassicalKind {
  CyclicGroup,        // C(n): powers of g
  ZnAdd,              // (Z_n, +)
  ZnMulSemigroup,     // (Z_n, x)
  ZnMulUnits,         // units of Z_n under x
  SymmetricGroup,     // S_n, n <= 5
  AlternatingGroup,   // A_n, n <= 5
  Dihedral2n,         // D_2n of order 2n with a^2 = b^n = 1, bab = a
  SymmetricSemigroup  // S(n): all self-maps of {1..n}, n <= 4
};

Magma build_classical(ClassicalKind kind, int n);

}  // namespace nalg
