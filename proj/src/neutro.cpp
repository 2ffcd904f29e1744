#include "nalg/neutro.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nalg {

std::string NeutroScalar::label() const {
  if (a == 0 && b == 0) return "0";
  std::string s;
  if (a != 0) s = std::to_string(a);
  if (b != 0) {
    if (!s.empty()) s += "+";
    if (b != 1) s += std::to_string(b);
    s += "I";
  }
  return s;
}

NeutroScalar NeutroScalar::parse(std::string_view text, int modulus) {
  // accepts "a", "bI", "I", "a+bI" with either part omitted
  int a = 0, b = 0;
  size_t pos = 0;
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return 1;  // bare "I"
    return std::atoi(std::string(text.substr(start, pos - start)).c_str());
  };
  int first = read_int();
  if (pos < text.size() && text[pos] == 'I') {
    b = first;
    ++pos;
  } else {
    a = first;
    if (pos < text.size() && text[pos] == '+') {
      ++pos;
      b = read_int();
      if (pos >= text.size() || text[pos] != 'I')
        throw error("bad neutrosophic scalar '" + std::string(text) + "'");
      ++pos;
    }
  }
  if (pos != text.size()) throw error("bad neutrosophic scalar '" + std::string(text) + "'");
  return NeutroScalar(a, b, modulus);
}

namespace {

NeutroScalar apply_modop(ModOp op, int t, int u, const NeutroScalar& x, const NeutroScalar& y) {
  switch (op) {
    case ModOp::Add: return x.add(y);
    case ModOp::Mul: return x.mul(y);
    case ModOp::Affine: return x.scale(t).add(y.scale(u));
  }
  throw error("bad modular op");
}

Magma scalars_to_magma(std::string name, const std::vector<NeutroScalar>& sorted, ModOp op, int t,
                       int u, int n) {
  const int k = static_cast<int>(sorted.size());
  std::map<NeutroScalar, int> idx;
  for (int i = 0; i < k; ++i) idx[sorted[i]] = i;
  std::vector<Element> elems(k);
  for (int i = 0; i < k; ++i) elems[i] = Element{i, sorted[i].label(), sorted[i].is_neutro()};
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto it = idx.find(apply_modop(op, t, u, sorted[a], sorted[b]));
      if (it == idx.end()) throw error("internal: extension carrier not closed");
      table[a * k + b] = static_cast<uint16_t>(it->second);
    }
  std::optional<int> zero;
  auto zit = idx.find(NeutroScalar(0, 0, n));
  if (zit != idx.end() && op != ModOp::Add) zero = zit->second;
  Magma probe(name, Kind::Groupoid, elems, table, zero);
  return Magma(std::move(name), classify_kind(probe), std::move(elems), std::move(table), zero);
}

}  // namespace

NeutroMagma extend_modular(const Magma& base) {
  ModOp op;
  int n = base.fam_n, t = 0, u = 0;
  switch (base.family) {
    case Family::ZnAdd: op = ModOp::Add; break;
    case Family::ZnMul: op = ModOp::Mul; break;
    case Family::ZnGroupoid:
      op = ModOp::Affine;
      t = base.fam_t;
      u = base.fam_u;
      break;
    default:
      throw error("non-modular-carrier: cannot lift " + base.name() + " to Z_n[I]");
  }
  if (n < 2) throw error("non-modular-carrier: modulus too small");

  // carrier scalars from the base labels
  std::vector<NeutroScalar> carrier;
  for (const auto& e : base.elements()) carrier.push_back(NeutroScalar::parse(e.label, n));
  // the base table must agree with the lifted operation on the carrier
  for (int a = 0; a < base.order(); ++a)
    for (int b = 0; b < base.order(); ++b) {
      NeutroScalar p = apply_modop(op, t, u, carrier[a], carrier[b]);
      auto it = std::find(carrier.begin(), carrier.end(), p);
      if (it == carrier.end() ||
          static_cast<int>(it - carrier.begin()) != base.at(a, b))
        throw error("non-modular-carrier: table of " + base.name() +
                    " does not match its modular operation");
    }

  // closure of carrier u {I} inside Z_n[I]
  std::vector<NeutroScalar> members = carrier;
  NeutroScalar iu(0, 1, n);
  if (std::find(members.begin(), members.end(), iu) == members.end()) members.push_back(iu);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      for (auto p : {apply_modop(op, t, u, members[i], members[j]),
                     apply_modop(op, t, u, members[j], members[i])}) {
        if (std::find(members.begin(), members.end(), p) == members.end()) members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());

  NeutroMagma nm;
  nm.construction =
      op == ModOp::Affine ? NeutroConstruction::GroupoidLift : NeutroConstruction::RingClosure;
  nm.base = base;
  nm.extended = scalars_to_magma("N(" + base.name() + ")", members, op, t, u, n);
  nm.extended.family = base.family;
  nm.extended.fam_n = n;
  nm.extended.fam_t = t;
  nm.extended.fam_u = u;
  nm.extended.construction = nm.construction;
  return nm;
}

NeutroMagma extend_loop(const Magma& l) {
  if (l.family != Family::LnLoop)
    throw error("not-an-Ln-loop: loop doubling is defined for the L_n(m) family");
  const int b = l.order();
  const int k = 2 * b;
  std::vector<Element> elems(k);
  for (int i = 0; i < b; ++i) {
    elems[i] = Element{i, l.label(i), false};
    elems[i + b] = Element{i + b, l.label(i) + "I", true};
  }
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int p = l.at(x % b, y % b);
      bool flag = x >= b || y >= b;
      table[x * k + y] = static_cast<uint16_t>(flag ? p + b : p);
    }
  NeutroMagma nm;
  nm.construction = NeutroConstruction::LoopDoubling;
  nm.base = l;
  nm.extended = Magma("N(" + l.name() + ")", Kind::Groupoid, std::move(elems), std::move(table));
  nm.extended.family = l.family;
  nm.extended.fam_n = l.fam_n;
  nm.extended.fam_m = l.fam_m;
  nm.extended.construction = NeutroConstruction::LoopDoubling;
  nm.extended.base_order = b;
  return nm;
}

NeutroMagma extend(const Magma& base) {
  if (base.family == Family::LnLoop) return extend_loop(base);
  return extend_modular(base);
}

std::optional<int> neutro_target(const Magma& m) {
  switch (m.construction) {
    case NeutroConstruction::RingClosure:
    case NeutroConstruction::GroupoidLift: {
      for (const auto& e : m.elements())
        if (e.label == "I") return e.index;
      return std::nullopt;
    }
    case NeutroConstruction::LoopDoubling: {
      for (const auto& e : m.elements())
        if (e.label == "eI") return e.index;
      return std::nullopt;
    }
    case NeutroConstruction::None: return std::nullopt;
  }
  return std::nullopt;
}

NeutroElementClasses neutro_element_classes(const NeutroMagma& nm) {
  const Magma& m = nm.extended;
  NeutroElementClasses out{IndexSet(m.order()), IndexSet(m.order()), IndexSet(m.order()),
                           IndexSet(m.order())};
  auto target = neutro_target(m);
  if (target) {
    for (int x = 0; x < m.order(); ++x)
      if (order_to(m, x, *target)) out.neutrosophic.add(x);
  }
  for (int x = 0; x < m.order(); ++x) {
    if (!m.element(x).neutro) continue;
    if (m.at(x, x) == x) out.neutro_idempotents.add(x);
    if (target && out.neutrosophic.test(x)) out.pseudo_torsion.add(x);
  }
  if (auto e = identity_of(m)) {
    for (int x = 0; x < m.order(); ++x) {
      if (!m.element(x).neutro) continue;
      for (int y = 0; y < m.order(); ++y)
        if (m.at(x, y) == *e && m.at(y, x) == *e) {
          out.neutro_units.add(x);
          break;
        }
    }
  }
  return out;
}

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Plain: return "plain";
    case Flavor::Neutrosophic: return "neutrosophic";
    case Flavor::Pseudo: return "pseudo-neutrosophic";
  }
  return "?";
}

Flavor substructure_flavor(const Magma& m, const IndexSet& s) {
  if (!is_closed(m, s)) throw error("not-closed: flavor asked of a non-closed subset");
  IndexSet unflagged(m.order());
  bool any_flag = false;
  s.for_each([&](int i) {
    if (m.element(i).neutro)
      any_flag = true;
    else
      unflagged.add(i);
  });
  if (!any_flag) return Flavor::Plain;

  // closed unflagged subsets of size >= 2 inside s
  std::vector<int> u = unflagged.to_vector();
  if (static_cast<int>(u.size()) >= 2) {
    // the unflagged part of a closed set is itself closed whenever no
    // product of unflagged members is flagged; otherwise search subsets
    // by closure of pairs
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = i; j < u.size(); ++j) {
        IndexSet seed(m.order());
        seed.add(u[i]);
        seed.add(u[j]);
        IndexSet c = closure(m, seed);
        if (c.count() >= 2 && unflagged.contains(c)) return Flavor::Neutrosophic;
      }
  }
  return Flavor::Pseudo;
}

bool is_doubling_subloop(const Magma& m, const IndexSet& s) {
  if (m.construction != NeutroConstruction::LoopDoubling) return false;
  const int b = m.base_order;
  IndexSet base_part(m.order()), flag_labels(m.order());
  s.for_each([&](int i) {
    if (i < b)
      base_part.add(i);
    else
      flag_labels.add(i - b);
  });
  if (base_part != flag_labels) return false;
  if (base_part.empty()) return false;
  return is_closed(m, s);
}

std::vector<IndexSet> flavored_substructures(const Magma& m, Flavor flavor) {
  std::vector<IndexSet> out;
  auto target = neutro_target(m);
  auto e = identity_of(m);
  IndexSet trivial(m.order());
  if (e) trivial.add(*e);
  if (m.construction == NeutroConstruction::LoopDoubling && target) trivial.add(*target);

  for (const auto& s : all_closed_subsets(m)) {
    if (s.count() == m.order()) continue;          // whole set
    if (trivial.contains(s)) continue;             // {identity}, {e, eI}
    if (flavor == Flavor::Neutrosophic && m.construction == NeutroConstruction::LoopDoubling) {
      // the paper's neutrosophic subloops of a doubling are exactly the
      // H u HI sets generated by a subloop and eI
      if (!is_doubling_subloop(m, s)) continue;
      IndexSet base_part(m.order());
      s.for_each([&](int i) {
        if (i < m.base_order) base_part.add(i);
      });
      if (base_part.count() < 2) continue;  // {e, eI} and smaller are trivial
      out.push_back(s);
      continue;
    }
    if (substructure_flavor(m, s) == flavor) out.push_back(s);
  }
  return out;
}

}  // namespace nalg
