#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nalg/classify.hpp"
#include "nalg/magma.hpp"
#include "nalg/neutro.hpp"

namespace nalg {

// Structural class of one component, with provenance taken into account
// (ring closures of groups classify as neutrosophic groups even when the
// carrier is only a monoid).
enum class ComponentClass { Group, Loop, Semigroup, Groupoid };

struct ComponentProfile {
  Kind kind = Kind::Groupoid;   // strongest table-level tag
  bool flags = false;           // neutrosophic elements present
  bool assoc = false;
  ComponentClass cls = ComponentClass::Groupoid;  // primary class
  bool contains_group = false;  // nontrivial unflagged closed subset that is a group
  bool contains_loop = false;   // same for loops (groups included)
};

ComponentProfile profile_component(const Magma& m);

enum class Taxon {
  Bigroup,
  NeutrosophicBigroup,
  StrongNeutrosophicBigroup,
  Bisemigroup,
  NeutrosophicBisemigroup,
  StrongNeutrosophicBisemigroup,
  BiloopI,
  BiloopII,
  NeutrosophicBiloop,
  StrongNeutrosophicBiloop,
  NGroup,
  NeutrosophicNGroup,
  StrongNeutrosophicNGroup,
  NSemigroup,
  NeutrosophicNSemigroup,
  StrongNeutrosophicNSemigroup,
  NLoop,
  NeutrosophicNLoop,
  StrongNeutrosophicNLoop,
  NGroupoid,
  NeutrosophicNGroupoid,
  Bigroupoid,
  NeutrosophicBigroupoid,
  NGroupSemigroup,
  NLoopGroupoid,
  NGlsg,
  NQuasiLoop,
  NQuasiSemigroup,
  MixedNeutrosophic,
  MixedDualNeutrosophic,
  WeakMixedNeutrosophic,
  WeakMixedDualNeutrosophic,
};

std::string_view taxon_name(Taxon t);
std::optional<Taxon> taxon_from_name(std::string_view s);
const std::vector<Taxon>& all_taxa();

// Ordered tagged disjoint union of component magmas.
class MultiStructure {
 public:
  MultiStructure() = default;
  MultiStructure(std::string name, std::vector<Magma> components);

  int n_components() const { return static_cast<int>(components_.size()); }
  const Magma& component(int i) const { return components_.at(i); }
  const std::vector<Magma>& components() const { return components_; }
  const ComponentProfile& profile(int i) const { return profiles_.at(i); }
  const std::string& name() const { return name_; }
  long order() const;

 private:
  std::string name_;
  std::vector<Magma> components_;
  std::vector<ComponentProfile> profiles_;
};

// Validates the declared taxon; throws error("taxon-violation: ...")
// naming the failed clause. Duplicate identical components are rejected.
MultiStructure make_multi(std::string name, std::vector<Magma> components,
                          std::optional<Taxon> declared = std::nullopt);

// Why `ms` fails to be of taxon `t`, or nullopt when it is.
std::optional<std::string> taxon_violation(const MultiStructure& ms, Taxon t);
std::vector<Taxon> classify_taxon(const MultiStructure& ms);

// Per-component closed subsets; empty parts mark deficit components.
struct SubMulti {
  std::vector<IndexSet> parts;
  int deficit() const {
    int d = 0;
    for (const auto& p : parts) d += p.empty() ? 1 : 0;
    return d;
  }
  long order() const {
    long o = 0;
    for (const auto& p : parts) o += p.count();
    return o;
  }
};

struct SubMultiFamily {
  std::vector<SubMulti> members;
  bool truncated = false;
};

// Cartesian combinations of per-component closed subsets filtered by
// flavor; with allow_deficit also combinations live on a proper subset
// of the components. Capped with a truncation flag.
SubMultiFamily sub_multi_family(const MultiStructure& ms, bool allow_deficit, Flavor flavor,
                                size_t cap = 200000);

struct NLagrange {
  LagrangeTag tag = LagrangeTag::Free;
  std::vector<SubMulti> witnesses, counterexamples;
};
struct NSylowPrime {
  long p = 0;
  int alpha = 0;
  std::optional<SubMulti> found;
};
struct NSylow {
  std::vector<NSylowPrime> primes;
  SylowTag tag = SylowTag::Free;
};
struct NCauchy {
  CauchyTag tag = CauchyTag::Free;
  long cauchy_count = 0, anti_count = 0;
};
struct NClassification {
  NLagrange lagrange;
  NSylow sylow;
  NCauchy cauchy;
};
NClassification n_classify(const MultiStructure& ms, Flavor flavor);

struct TupleSylowReport {
  bool found = false;
  SubMulti witness;
  long biorder = 0;  // sum of the p_i^alpha_i
};
// Componentwise (p_1..p_N)-Sylow search: part i must be a p_i-Sylow
// neutrosophic substructure of component i.
TupleSylowReport tuple_sylow(const MultiStructure& ms, const std::vector<long>& primes);

enum class IdentityMode { SubloopQuantified, WholeStructure };

// Subloop-quantified: every proper closed neutrosophic subset of each
// loop component satisfies the identity. Whole-structure: each loop
// component satisfies it globally.
bool identity_class_multi(const MultiStructure& ms, IdentityName id, IdentityMode mode);

struct NIdealVerdict {
  bool n_ideal = false;
  bool maximal = false, minimal = false;
  bool quasi_maximal = false, quasi_minimal = false;
  std::vector<IdealVerdict> per_component;
};
NIdealVerdict n_ideals(const MultiStructure& ms, const SubMulti& s);

struct NTuple {
  std::vector<int> coords;
  bool neutro = false;
};
struct NArySpecialReport {
  std::vector<NTuple> idempotents;
  std::vector<std::pair<NTuple, NTuple>> zero_divisor_pairs;
  std::vector<NTuple> units;
  bool partial = false;  // enumeration capped
};
NArySpecialReport n_ary_special(const MultiStructure& ms, size_t tuple_cap = 1000000,
                                size_t list_cap = 4096);
bool is_n_ary_idempotent(const MultiStructure& ms, const std::vector<int>& coords);
bool is_n_ary_zero_divisor(const MultiStructure& ms, const std::vector<int>& coords);
bool is_n_ary_unit(const MultiStructure& ms, const std::vector<int>& coords);

struct NHomVerdict {
  bool ok = false;
  std::string reason;
  SubMulti kernel;
};
// Componentwise product preservation with flags preserved and I -> I.
NHomVerdict verify_n_homomorphism(const MultiStructure& src, const MultiStructure& dst,
                                  const std::vector<std::vector<int>>& maps);

// Bicoset of h by element a living in component comp: that part gets
// translated, the others pass through.
SubMulti bicoset(const MultiStructure& ms, const SubMulti& h, int comp, int a, Side side);

struct HKCheck {
  bool hk_closed = false;              // every H_i K_i closed
  std::vector<bool> commute;           // H_i K_i == K_i H_i per component
  bool componentwise_commute = false;  // all of them
};
HKCheck hk_product_check(const MultiStructure& ms, const SubMulti& h, const SubMulti& k);

// multi <name> N=<k> followed by embedded magma blocks
std::string to_text(const MultiStructure& ms);
MultiStructure parse_multi(std::string_view text);

std::string render_submulti(const MultiStructure& ms, const SubMulti& s);

}  // namespace nalg
