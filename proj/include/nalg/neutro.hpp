#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nalg/magma.hpp"

namespace nalg {

// Residue pair a + bI in Z_n[I] with I^2 = I.
struct NeutroScalar {
  int a = 0, b = 0, n = 1;

  NeutroScalar() = default;
  NeutroScalar(int a_, int b_, int n_) : a(((a_ % n_) + n_) % n_), b(((b_ % n_) + n_) % n_), n(n_) {}

  NeutroScalar add(const NeutroScalar& o) const { return {a + o.a, b + o.b, n}; }
  // (a+bI)(c+dI) = ac + (ad + bc + bd)I, forced by I^2 = I
  NeutroScalar mul(const NeutroScalar& o) const { return {a * o.a, a * o.b + b * o.a + b * o.b, n}; }
  NeutroScalar scale(int t) const { return {t * a, t * b, n}; }

  bool operator==(const NeutroScalar& o) const { return a == o.a && b == o.b && n == o.n; }
  bool operator<(const NeutroScalar& o) const { return a != o.a ? a < o.a : b < o.b; }

  bool is_neutro() const { return b != 0; }

  // canonical label: 0-suppressed "a+bI" ("3", "2I", "I", "1+4I")
  std::string label() const;
  static NeutroScalar parse(std::string_view text, int modulus);
};

// Operation lifted to Z_n[I] when extending a modular carrier.
enum class ModOp { Add, Mul, Affine };  // Affine: a*b = ta + ub

struct NeutroMagma {
  Magma base;      // the I-free core
  Magma extended;  // the full <G u I> table
  NeutroConstruction construction = NeutroConstruction::None;
};

// Extension of a residue-based magma by I: closure of its elements plus
// I inside Z_n[I] under the lifted operation. The base magma must carry
// modular family metadata (ZnAdd / ZnMul / ZnGroupoid or residue labels);
// throws error("non-modular-carrier: ...") otherwise.
NeutroMagma extend_modular(const Magma& base);

// Doubling of an L_n(m) loop: elements e,1..n,eI,1I..nI; products take
// the base product with the flag absorbed (flag(xy) = flag(x) or
// flag(y)). Order 2(n+1).
NeutroMagma extend_loop(const Magma& ln_loop);

// Extension dispatch for any constructor-built magma.
NeutroMagma extend(const Magma& base);

// Index of the neutrosophic target: I for ring closures and lifts, eI
// for loop doublings. Absent when the magma carries no construction tag.
std::optional<int> neutro_target(const Magma& extended);

struct NeutroElementClasses {
  IndexSet neutrosophic;       // left-power orbit hits the I-target
  IndexSet neutro_idempotents; // flagged x with x^2 = x
  IndexSet neutro_units;       // flagged x with a two-sided inverse
  IndexSet pseudo_torsion;     // flagged x whose orbit hits the I-target
};
NeutroElementClasses neutro_element_classes(const NeutroMagma& nm);

enum class Flavor { Plain, Neutrosophic, Pseudo };
std::string_view flavor_name(Flavor f);

// plain: no flagged element; neutrosophic: flagged elements plus a
// nontrivial closed unflagged subset; pseudo: flagged elements and no
// such subset beyond one element.
Flavor substructure_flavor(const Magma& m, const IndexSet& s);

// The generated-by-subloop-and-I form H u HI inside a loop-doubling
// extension; this is what the loop classifiers quantify over.
bool is_doubling_subloop(const Magma& extended, const IndexSet& s);

// Closed subsets of the requested flavor, honouring the doubling form
// for loop extensions; trivial subsets ({identity}, {e,eI}, whole set)
// are excluded.
std::vector<IndexSet> flavored_substructures(const Magma& m, Flavor flavor);

}  // namespace nalg
