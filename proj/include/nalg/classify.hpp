#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nalg/magma.hpp"
#include "nalg/neutro.hpp"

namespace nalg {

enum class LagrangeTag { Lagrange, Weakly, Free };
std::string_view lagrange_tag_name(LagrangeTag t);

struct LagrangeVerdict {
  LagrangeTag tag = LagrangeTag::Free;
  std::vector<IndexSet> witnesses;        // dividing substructures
  std::vector<IndexSet> counterexamples;  // non-dividing substructures
};

// Divisibility classification over the nontrivial proper closed subsets
// of the requested flavor.
LagrangeVerdict lagrange_verdict(const Magma& m, Flavor flavor);

struct SylowPrimeRecord {
  long p = 0;
  int alpha = 0;                  // p^alpha || order
  std::optional<IndexSet> found;  // substructure of order exactly p^alpha
  std::optional<IndexSet> super;  // substructure of order p^(alpha+t), t >= 1
};

enum class SylowTag { Sylow, Weakly, Free, Super };
std::string_view sylow_tag_name(SylowTag t);

struct SylowReport {
  std::vector<SylowPrimeRecord> primes;
  SylowTag tag = SylowTag::Free;
};

SylowReport sylow_report(const Magma& m, Flavor flavor);

// Closed-form L_n family predicate: with n+1 = p^k r, gcd(p, r) = 1, a
// neutrosophic subloop of order 2 p^k exists iff (p^k - 1) | (r - 1).
bool sylow_2pk_exists(int n, long p, int k);

struct CauchyRecord {
  int element = 0;
  std::optional<int> exp_identity;  // smallest k with x^k = e
  std::optional<int> exp_target;    // smallest k with x^k = I-target
  bool divides_identity = false;
  bool divides_target = false;
};

enum class CauchyTag { Cauchy, Semi, Weakly, Free };
std::string_view cauchy_tag_name(CauchyTag t);

struct CauchyReport {
  std::vector<CauchyRecord> records;
  CauchyTag tag = CauchyTag::Free;
};

// Per-element exponents to the identity (Cauchy) and to the I-target
// (Cauchy-neutrosophic) with divisibility flags. The structure tag
// ignores the identity and the I-target themselves.
CauchyReport cauchy_report(const Magma& m);

struct CanonicalSubloopFamily {
  int n = 0, m = 0, t = 0;
  Magma extension;                // <L_n(m) u I>
  std::vector<IndexSet> members;  // the t subloops <H_i(t) u I>, i = 1..t
  bool closed = true, orders_ok = true, intersections_ok = true, covers = true, isomorphic = true;
  bool verified() const { return closed && orders_ok && intersections_ok && covers && isomorphic; }
};

// The t arithmetic-progression subloops of order 2(n/t + 1), verified.
CanonicalSubloopFamily canonical_subloops(int n, int m, int t);

struct OrderCharacterization {
  std::set<int> ks;        // k with a neutrosophic subloop of order 2(k+1)
  std::set<int> divisors;  // divisors of n
  bool match = false;
};

// K = {k : <L_n(m) u I> has a neutrosophic subloop of order 2(k+1)}
// from the exhaustive lattice, compared against the divisors of n.
OrderCharacterization subloop_order_characterization(int n, int m);

struct ConjugacyResult {
  bool conjugate = false;
  int x = -1, y = -1;  // witness pair (groupoid style uses x only)
};

// Group style: exists x, y with xH = Ky. Groupoid style (for
// groupoid-kind magmas): exists x in H with H = xK or K = ... per the
// one-sided definition.
ConjugacyResult conjugate_substructures(const Magma& m, const IndexSet& h, const IndexSet& k);

struct NormalizerResult {
  IndexSet members;
  bool closed = false;
};
NormalizerResult normalizer_of(const Magma& m, int a);

// Report rendering: LAGRANGE=..., SYLOW p=... alpha=... found=...,
// CAUCHY=..., followed by witness blocks.
std::string render_classification(const Magma& m, Flavor flavor);

}  // namespace nalg
