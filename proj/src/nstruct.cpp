#include "nalg/nstruct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nalg {

namespace {

// classify a subset of a magma through its restricted table
Kind subset_kind(const Magma& m, const std::vector<int>& v) {
  auto in = [&](int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  bool closed = true, assoc = true;
  for (int a : v)
    for (int b : v) {
      if (!in(m.at(a, b))) closed = false;
      for (int c : v)
        if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c))) assoc = false;
    }
  if (!closed) return Kind::Groupoid;
  std::optional<int> id;
  for (int e : v) {
    bool ok = true;
    for (int a : v)
      if (m.at(e, a) != a || m.at(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  bool latin = true;
  for (int a : v) {
    for (int b : v) {
      int hits_row = 0, hits_col = 0;
      for (int c : v) {
        if (m.at(a, c) == b) ++hits_row;
        if (m.at(c, a) == b) ++hits_col;
      }
      if (hits_row != 1 || hits_col != 1) latin = false;
    }
  }
  if (assoc) {
    if (id && latin) return Kind::Group;
    if (id) return Kind::Monoid;
    return Kind::Semigroup;
  }
  if (id && latin) return Kind::Loop;
  return Kind::Groupoid;
}

bool unflagged_closure_is(const Magma& m, Kind want_a, Kind want_b) {
  // exists x unflagged with closure({x}) unflagged, size >= 2, of the
  // wanted kind; single generators suffice for group containment
  for (int x = 0; x < m.order(); ++x) {
    if (m.element(x).neutro) continue;
    IndexSet seed(m.order());
    seed.add(x);
    IndexSet c = closure(m, seed);
    bool unflagged = true;
    c.for_each([&](int i) {
      if (m.element(i).neutro) unflagged = false;
    });
    if (!unflagged || c.count() < 2) continue;
    Kind k = subset_kind(m, c.to_vector());
    if (k == want_a || k == want_b) return true;
  }
  return false;
}

}  // namespace

ComponentProfile profile_component(const Magma& m) {
  ComponentProfile p;
  p.kind = classify_kind(m);
  p.flags = m.has_neutro_element();
  p.assoc = p.kind == Kind::Group || p.kind == Kind::Monoid || p.kind == Kind::Semigroup;

  if (p.flags) {
    p.contains_group = unflagged_closure_is(m, Kind::Group, Kind::Group);
    // unflagged part as a whole, when closed, can witness a loop
    IndexSet unflagged(m.order());
    for (int i = 0; i < m.order(); ++i)
      if (!m.element(i).neutro) unflagged.add(i);
    if (unflagged.count() >= 2 && is_closed(m, unflagged)) {
      Kind ku = subset_kind(m, unflagged.to_vector());
      if (ku == Kind::Loop || ku == Kind::Group) p.contains_loop = true;
    }
    p.contains_loop = p.contains_loop || p.contains_group;

    // primary class, provenance first
    if (m.construction == NeutroConstruction::LoopDoubling) {
      p.cls = ComponentClass::Loop;
    } else if (unflagged.count() >= 1 && is_closed(m, unflagged)) {
      Kind ku = subset_kind(m, unflagged.to_vector());
      if (ku == Kind::Group)
        p.cls = ComponentClass::Group;
      else if (ku == Kind::Loop)
        p.cls = ComponentClass::Loop;
      else
        p.cls = p.assoc ? ComponentClass::Semigroup : ComponentClass::Groupoid;
    } else {
      p.cls = p.assoc ? ComponentClass::Semigroup : ComponentClass::Groupoid;
    }
  } else {
    p.contains_group = p.kind == Kind::Group && m.order() >= 2;
    p.contains_loop = p.contains_group || (p.kind == Kind::Loop && m.order() >= 2);
    switch (p.kind) {
      case Kind::Group: p.cls = ComponentClass::Group; break;
      case Kind::Loop: p.cls = ComponentClass::Loop; break;
      case Kind::Monoid:
      case Kind::Semigroup: p.cls = ComponentClass::Semigroup; break;
      case Kind::Groupoid: p.cls = ComponentClass::Groupoid; break;
    }
  }
  return p;
}

std::string_view taxon_name(Taxon t) {
  switch (t) {
    case Taxon::Bigroup: return "bigroup";
    case Taxon::NeutrosophicBigroup: return "neutrosophic-bigroup";
    case Taxon::StrongNeutrosophicBigroup: return "strong-neutrosophic-bigroup";
    case Taxon::Bisemigroup: return "bisemigroup";
    case Taxon::NeutrosophicBisemigroup: return "neutrosophic-bisemigroup";
    case Taxon::StrongNeutrosophicBisemigroup: return "strong-neutrosophic-bisemigroup";
    case Taxon::BiloopI: return "biloop-I";
    case Taxon::BiloopII: return "biloop-II";
    case Taxon::NeutrosophicBiloop: return "neutrosophic-biloop";
    case Taxon::StrongNeutrosophicBiloop: return "strong-neutrosophic-biloop";
    case Taxon::NGroup: return "N-group";
    case Taxon::NeutrosophicNGroup: return "neutrosophic-N-group";
    case Taxon::StrongNeutrosophicNGroup: return "strong-neutrosophic-N-group";
    case Taxon::NSemigroup: return "N-semigroup";
    case Taxon::NeutrosophicNSemigroup: return "neutrosophic-N-semigroup";
    case Taxon::StrongNeutrosophicNSemigroup: return "strong-neutrosophic-N-semigroup";
    case Taxon::NLoop: return "N-loop";
    case Taxon::NeutrosophicNLoop: return "neutrosophic-N-loop";
    case Taxon::StrongNeutrosophicNLoop: return "strong-neutrosophic-N-loop";
    case Taxon::NGroupoid: return "N-groupoid";
    case Taxon::NeutrosophicNGroupoid: return "neutrosophic-N-groupoid";
    case Taxon::Bigroupoid: return "bigroupoid";
    case Taxon::NeutrosophicBigroupoid: return "neutrosophic-bigroupoid";
    case Taxon::NGroupSemigroup: return "N-group-semigroup";
    case Taxon::NLoopGroupoid: return "N-loop-groupoid";
    case Taxon::NGlsg: return "N-glsg";
    case Taxon::NQuasiLoop: return "N-quasi-loop";
    case Taxon::NQuasiSemigroup: return "N-quasi-semigroup";
    case Taxon::MixedNeutrosophic: return "mixed-neutrosophic";
    case Taxon::MixedDualNeutrosophic: return "mixed-dual-neutrosophic";
    case Taxon::WeakMixedNeutrosophic: return "weak-mixed-neutrosophic";
    case Taxon::WeakMixedDualNeutrosophic: return "weak-mixed-dual-neutrosophic";
  }
  return "?";
}

std::optional<Taxon> taxon_from_name(std::string_view s) {
  for (Taxon t : all_taxa())
    if (taxon_name(t) == s) return t;
  return std::nullopt;
}

const std::vector<Taxon>& all_taxa() {
  static const std::vector<Taxon> taxa = {
      Taxon::Bigroup,
      Taxon::NeutrosophicBigroup,
      Taxon::StrongNeutrosophicBigroup,
      Taxon::Bisemigroup,
      Taxon::NeutrosophicBisemigroup,
      Taxon::StrongNeutrosophicBisemigroup,
      Taxon::BiloopI,
      Taxon::BiloopII,
      Taxon::NeutrosophicBiloop,
      Taxon::StrongNeutrosophicBiloop,
      Taxon::NGroup,
      Taxon::NeutrosophicNGroup,
      Taxon::StrongNeutrosophicNGroup,
      Taxon::NSemigroup,
      Taxon::NeutrosophicNSemigroup,
      Taxon::StrongNeutrosophicNSemigroup,
      Taxon::NLoop,
      Taxon::NeutrosophicNLoop,
      Taxon::StrongNeutrosophicNLoop,
      Taxon::NGroupoid,
      Taxon::NeutrosophicNGroupoid,
      Taxon::Bigroupoid,
      Taxon::NeutrosophicBigroupoid,
      Taxon::NGroupSemigroup,
      Taxon::NLoopGroupoid,
      Taxon::NGlsg,
      Taxon::NQuasiLoop,
      Taxon::NQuasiSemigroup,
      Taxon::MixedNeutrosophic,
      Taxon::MixedDualNeutrosophic,
      Taxon::WeakMixedNeutrosophic,
      Taxon::WeakMixedDualNeutrosophic,
  };
  return taxa;
}

MultiStructure::MultiStructure(std::string name, std::vector<Magma> components)
    : name_(std::move(name)), components_(std::move(components)) {
  if (components_.size() < 2) throw error("multi structure needs at least 2 components");
  for (const auto& c : components_) profiles_.push_back(profile_component(c));
}

long MultiStructure::order() const {
  long o = 0;
  for (const auto& c : components_) o += c.order();
  return o;
}

namespace {

// slot predicates over profiles
bool groupish(const ComponentProfile& p) {
  return p.cls == ComponentClass::Group || (p.flags && p.contains_group);
}
bool neutro_groupish(const ComponentProfile& p) { return p.flags && groupish(p); }
bool loopish(const ComponentProfile& p) {
  return p.cls == ComponentClass::Loop || p.cls == ComponentClass::Group ||
         (p.flags && p.contains_loop);
}
bool neutro_loopish(const ComponentProfile& p) { return p.flags && p.contains_loop && !p.assoc; }
bool proper_loopish(const ComponentProfile& p) {
  return (!p.flags && p.kind == Kind::Loop) || neutro_loopish(p);
}
bool semigroupish(const ComponentProfile& p) { return p.assoc; }
bool semigroup_not_group(const ComponentProfile& p) {
  return p.assoc && p.cls == ComponentClass::Semigroup && !groupish(p);
}
bool strictly_groupoid(const ComponentProfile& p) { return p.cls == ComponentClass::Groupoid; }

// exclusive assignment of one component per slot
bool match_slots(const std::vector<ComponentProfile>& ps,
                 const std::vector<std::function<bool(const ComponentProfile&)>>& slots,
                 size_t at = 0, std::vector<char>* used = nullptr) {
  std::vector<char> storage;
  if (!used) {
    storage.assign(ps.size(), 0);
    used = &storage;
  }
  if (at == slots.size()) return true;
  for (size_t i = 0; i < ps.size(); ++i) {
    if ((*used)[i] || !slots[at](ps[i])) continue;
    (*used)[i] = 1;
    if (match_slots(ps, slots, at + 1, used)) return true;
    (*used)[i] = 0;
  }
  return false;
}

int count_if_profile(const std::vector<ComponentProfile>& ps,
                     bool (*pred)(const ComponentProfile&)) {
  int c = 0;
  for (const auto& p : ps) c += pred(p) ? 1 : 0;
  return c;
}

bool class_present(const std::vector<ComponentProfile>& ps, ComponentClass cls, bool flagged) {
  for (const auto& p : ps)
    if (p.cls == cls && p.flags == flagged) return true;
  return false;
}

int neutro_class_count(const std::vector<ComponentProfile>& ps) {
  int c = 0;
  for (ComponentClass cls : {ComponentClass::Group, ComponentClass::Loop,
                             ComponentClass::Semigroup, ComponentClass::Groupoid})
    c += class_present(ps, cls, true) ? 1 : 0;
  return c;
}

int plain_class_count(const std::vector<ComponentProfile>& ps) {
  int c = 0;
  for (ComponentClass cls : {ComponentClass::Group, ComponentClass::Loop,
                             ComponentClass::Semigroup, ComponentClass::Groupoid})
    c += class_present(ps, cls, false) ? 1 : 0;
  return c;
}

}  // namespace

std::optional<std::string> taxon_violation(const MultiStructure& ms, Taxon t) {
  const int n = ms.n_components();
  std::vector<ComponentProfile> ps;
  for (int i = 0; i < n; ++i) ps.push_back(ms.profile(i));
  auto need = [&](bool cond, const char* clause) -> std::optional<std::string> {
    if (cond) return std::nullopt;
    return std::string(clause);
  };
  auto all_of_p = [&](bool (*pred)(const ComponentProfile&)) {
    return count_if_profile(ps, pred) == n;
  };
  auto any_of_p = [&](bool (*pred)(const ComponentProfile&)) {
    return count_if_profile(ps, pred) > 0;
  };
  int flagged = 0;
  for (const auto& p : ps) flagged += p.flags ? 1 : 0;

  switch (t) {
    case Taxon::Bigroup:
      if (auto r = need(n == 2, "bigroup needs exactly 2 components")) return r;
      return need(all_of_p(groupish), "every component must be a group or contain one");
    case Taxon::NeutrosophicBigroup:
      if (auto r = taxon_violation(ms, Taxon::Bigroup)) return r;
      return need(flagged >= 1, "a neutrosophic component is required");
    case Taxon::StrongNeutrosophicBigroup:
      if (auto r = need(n == 2, "strong neutrosophic bigroup needs exactly 2 components")) return r;
      return need(all_of_p(neutro_groupish), "every component must be a neutrosophic group");
    case Taxon::Bisemigroup:
      if (auto r = need(n == 2, "bisemigroup needs exactly 2 components")) return r;
      return need(all_of_p(semigroupish), "every component must be associative");
    case Taxon::NeutrosophicBisemigroup:
      if (auto r = taxon_violation(ms, Taxon::Bisemigroup)) return r;
      return need(flagged >= 1, "a neutrosophic component is required");
    case Taxon::StrongNeutrosophicBisemigroup:
      if (auto r = taxon_violation(ms, Taxon::Bisemigroup)) return r;
      return need(flagged == n, "every component must be neutrosophic");
    case Taxon::BiloopI:
      if (auto r = need(n == 2, "biloop needs exactly 2 components")) return r;
      return need(match_slots(ps, {loopish, groupish}),
                  "need one loop component and one group component");
    case Taxon::BiloopII:
      if (auto r = need(n == 2, "biloop needs exactly 2 components")) return r;
      return need(all_of_p(loopish), "both components must be loops");
    case Taxon::NeutrosophicBiloop: {
      if (auto r = need(n == 2, "biloop needs exactly 2 components")) return r;
      bool shape = match_slots(ps, {neutro_loopish, loopish}) ||
                   match_slots(ps, {neutro_loopish, groupish});
      return need(shape, "need a neutrosophic loop plus a loop or group");
    }
    case Taxon::StrongNeutrosophicBiloop:
      if (auto r = need(n == 2, "biloop needs exactly 2 components")) return r;
      return need(match_slots(ps, {neutro_loopish, neutro_groupish}),
                  "need a neutrosophic loop plus a neutrosophic group");
    case Taxon::NGroup:
      return need(all_of_p(groupish), "every component must be a group or contain one");
    case Taxon::NeutrosophicNGroup:
      if (auto r = taxon_violation(ms, Taxon::NGroup)) return r;
      return need(any_of_p(neutro_groupish), "a neutrosophic group component is required");
    case Taxon::StrongNeutrosophicNGroup:
      return need(all_of_p(neutro_groupish), "every component must be a neutrosophic group");
    case Taxon::NSemigroup:
      return need(all_of_p(semigroupish), "every component must be associative");
    case Taxon::NeutrosophicNSemigroup:
      if (auto r = taxon_violation(ms, Taxon::NSemigroup)) return r;
      return need(flagged >= 1, "a neutrosophic component is required");
    case Taxon::StrongNeutrosophicNSemigroup:
      if (auto r = taxon_violation(ms, Taxon::NSemigroup)) return r;
      return need(flagged == n, "every component must be neutrosophic");
    case Taxon::NLoop:
      if (auto r = need(all_of_p(loopish), "every component must be a loop or group")) return r;
      return need(any_of_p(proper_loopish), "at least one component must be a loop");
    case Taxon::NeutrosophicNLoop:
      if (auto r = need(all_of_p(loopish), "every component must be a loop or group")) return r;
      return need(any_of_p(neutro_loopish), "a neutrosophic loop component is required");
    case Taxon::StrongNeutrosophicNLoop: {
      for (const auto& p : ps)
        if (!neutro_loopish(p) && !neutro_groupish(p))
          return std::string("every component must be a neutrosophic loop or neutrosophic group");
      return need(any_of_p(neutro_loopish), "a neutrosophic loop component is required");
    }
    case Taxon::NGroupoid:
      if (auto r = need(any_of_p(strictly_groupoid), "a groupoid component is required")) return r;
      return need(any_of_p(semigroupish), "a semigroup component is required");
    case Taxon::NeutrosophicNGroupoid: {
      bool ng = false, nsg = false;
      for (const auto& p : ps) {
        if (p.flags && strictly_groupoid(p)) ng = true;
        if (p.flags && p.assoc) nsg = true;
      }
      if (auto r = need(ng, "a neutrosophic groupoid component is required")) return r;
      return need(nsg, "a neutrosophic semigroup component is required");
    }
    case Taxon::Bigroupoid:
      if (auto r = need(n == 2, "bigroupoid needs exactly 2 components")) return r;
      return need(any_of_p(strictly_groupoid), "a groupoid component is required");
    case Taxon::NeutrosophicBigroupoid: {
      if (auto r = need(n == 2, "bigroupoid needs exactly 2 components")) return r;
      bool ng = false;
      for (const auto& p : ps)
        if (p.flags && strictly_groupoid(p)) ng = true;
      return need(ng, "a neutrosophic groupoid component is required");
    }
    case Taxon::NGroupSemigroup:
      if (auto r = need(all_of_p(semigroupish), "every component must be associative")) return r;
      return need(match_slots(ps, {groupish, semigroup_not_group}),
                  "need a group component and a semigroup component that is not a group");
    case Taxon::NLoopGroupoid:
      return need(match_slots(ps, {proper_loopish, strictly_groupoid}),
                  "need a loop component and a groupoid component");
    case Taxon::NGlsg:
      return need(match_slots(ps, {groupish, proper_loopish, semigroup_not_group, strictly_groupoid}),
                  "need group, loop, semigroup and groupoid components all present");
    case Taxon::NQuasiLoop:
      if (auto r = need(any_of_p(neutro_loopish), "a neutrosophic loop component is required"))
        return r;
      return need(any_of_p(strictly_groupoid), "a groupoid component is required");
    case Taxon::NQuasiSemigroup: {
      bool nl = false, nsg = false;
      for (const auto& p : ps) {
        if (neutro_loopish(p))
          nl = true;
        else if (p.flags && p.assoc)
          nsg = true;
        else
          return std::string(
              "every component must be a neutrosophic loop or a neutrosophic semigroup");
      }
      if (auto r = need(nl, "a neutrosophic loop component is required")) return r;
      return need(nsg, "a neutrosophic semigroup component is required");
    }
    case Taxon::MixedNeutrosophic: {
      if (auto r = need(n >= 5, "mixed neutrosophic N-structure needs N >= 5")) return r;
      for (ComponentClass cls : {ComponentClass::Group, ComponentClass::Loop,
                                 ComponentClass::Semigroup, ComponentClass::Groupoid})
        if (!class_present(ps, cls, true))
          return std::string("all four neutrosophic kinds (group, loop, semigroup, groupoid) "
                             "must be present");
      return std::nullopt;
    }
    case Taxon::MixedDualNeutrosophic: {
      if (auto r = need(n >= 5, "mixed dual neutrosophic N-structure needs N >= 5")) return r;
      for (ComponentClass cls : {ComponentClass::Group, ComponentClass::Loop,
                                 ComponentClass::Semigroup, ComponentClass::Groupoid})
        if (!class_present(ps, cls, false))
          return std::string("all four plain kinds (group, loop, semigroup, groupoid) "
                             "must be present");
      return need(flagged >= 1, "the remaining components must be neutrosophic");
    }
    case Taxon::WeakMixedNeutrosophic: {
      bool gl = class_present(ps, ComponentClass::Group, true) ||
                class_present(ps, ComponentClass::Loop, true);
      bool gs = class_present(ps, ComponentClass::Semigroup, true) ||
                class_present(ps, ComponentClass::Groupoid, true);
      if (auto r = need(gl, "a neutrosophic group or loop component is required")) return r;
      if (auto r = need(gs, "a neutrosophic semigroup or groupoid component is required")) return r;
      int c = neutro_class_count(ps);
      return need(c >= 2 && c <= 3, "between 2 and 3 neutrosophic kinds must be present");
    }
    case Taxon::WeakMixedDualNeutrosophic: {
      bool gl = class_present(ps, ComponentClass::Group, false) ||
                class_present(ps, ComponentClass::Loop, false);
      bool gs = class_present(ps, ComponentClass::Semigroup, false) ||
                class_present(ps, ComponentClass::Groupoid, false);
      if (auto r = need(gl, "a plain group or loop component is required")) return r;
      if (auto r = need(gs, "a plain semigroup or groupoid component is required")) return r;
      if (auto r = need(flagged >= 1, "a neutrosophic component is required")) return r;
      return need(plain_class_count(ps) <= 3, "at most 3 plain kinds may be present");
    }
  }
  return std::string("unknown taxon");
}

MultiStructure make_multi(std::string name, std::vector<Magma> components,
                          std::optional<Taxon> declared) {
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j)
      if (to_text(components[i]) == to_text(components[j]))
        throw error("taxon-violation: components " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " are identical");
  MultiStructure ms(std::move(name), std::move(components));
  if (declared) {
    if (auto why = taxon_violation(ms, *declared))
      throw error("taxon-violation: not a " + std::string(taxon_name(*declared)) + ": " + *why);
  }
  return ms;
}

std::vector<Taxon> classify_taxon(const MultiStructure& ms) {
  std::vector<Taxon> out;
  for (Taxon t : all_taxa())
    if (!taxon_violation(ms, t)) out.push_back(t);
  return out;
}

namespace {

// neutrosophic-qualifying closed subsets of one component
bool part_is_neutro(const Magma& comp, const IndexSet& s) {
  if (s.empty()) return false;
  if (comp.construction == NeutroConstruction::LoopDoubling) {
    if (!is_doubling_subloop(comp, s)) return false;
    int base_members = 0;
    s.for_each([&](int i) {
      if (i < comp.base_order) ++base_members;
    });
    return base_members >= 2;
  }
  return substructure_flavor(comp, s) == Flavor::Neutrosophic;
}

bool part_is_pseudo(const Magma& comp, const IndexSet& s) {
  return !s.empty() && substructure_flavor(comp, s) == Flavor::Pseudo;
}

}  // namespace

SubMultiFamily sub_multi_family(const MultiStructure& ms, bool allow_deficit, Flavor flavor,
                                size_t cap) {
  const int n = ms.n_components();
  std::vector<std::vector<IndexSet>> pools(n);
  for (int i = 0; i < n; ++i) pools[i] = all_closed_subsets(ms.component(i));

  SubMultiFamily fam;
  // supports: all components, or (with deficit) any nonempty proper subset
  std::vector<std::vector<int>> supports;
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 0);
  supports.push_back(full);
  if (allow_deficit) {
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> sup;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) sup.push_back(i);
      if (static_cast<int>(sup.size()) >= 1) supports.push_back(sup);
    }
  }

  for (const auto& sup : supports) {
    std::vector<size_t> pick(sup.size(), 0);
    while (true) {
      SubMulti sm;
      sm.parts.assign(n, IndexSet(0));
      for (int i = 0; i < n; ++i) sm.parts[i] = IndexSet(ms.component(i).order());
      for (size_t s = 0; s < sup.size(); ++s) sm.parts[sup[s]] = pools[sup[s]][pick[s]];

      bool keep = true;
      if (flavor == Flavor::Plain) {
        for (int i = 0; i < n && keep; ++i)
          sm.parts[i].for_each([&](int x) {
            if (ms.component(i).element(x).neutro) keep = false;
          });
      } else if (flavor == Flavor::Neutrosophic) {
        bool any = false;
        for (int i = 0; i < n; ++i) any = any || part_is_neutro(ms.component(i), sm.parts[i]);
        keep = any;
      } else if (flavor == Flavor::Pseudo) {
        bool any_pseudo = false, any_neutro = false;
        for (int i = 0; i < n; ++i) {
          any_pseudo = any_pseudo || part_is_pseudo(ms.component(i), sm.parts[i]);
          any_neutro = any_neutro || part_is_neutro(ms.component(i), sm.parts[i]);
        }
        keep = any_pseudo && !any_neutro;
      }
      if (keep) {
        fam.members.push_back(std::move(sm));
        if (fam.members.size() >= cap) {
          fam.truncated = true;
          return fam;
        }
      }

      // advance the odometer
      size_t idx = 0;
      while (idx < pick.size()) {
        if (++pick[idx] < pools[sup[idx]].size()) break;
        pick[idx] = 0;
        ++idx;
      }
      if (idx == pick.size()) break;
    }
  }
  return fam;
}

namespace {

std::vector<std::pair<long, int>> prime_powers_of_long(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int a = 0;
      while (n % p == 0) {
        n /= p;
        ++a;
      }
      f.emplace_back(p, a);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// trivial submultis (every part within {identity, I-target}) and the
// whole structure are not witnesses
bool submulti_is_trivial(const MultiStructure& ms, const SubMulti& s) {
  long total = 0, trivial_total = 0;
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    total += s.parts[i].count();
    IndexSet triv(c.order());
    if (auto e = identity_of(c)) triv.add(*e);
    if (auto t = neutro_target(c)) triv.add(*t);
    if (triv.contains(s.parts[i])) trivial_total += s.parts[i].count();
  }
  if (total == trivial_total) return true;
  if (total == ms.order()) return true;  // the whole structure
  return false;
}

}  // namespace

NClassification n_classify(const MultiStructure& ms, Flavor flavor) {
  NClassification out;
  SubMultiFamily fam = sub_multi_family(ms, false, flavor);
  const long o = ms.order();

  for (const auto& sm : fam.members) {
    if (submulti_is_trivial(ms, sm)) continue;
    if (o % sm.order() == 0)
      out.lagrange.witnesses.push_back(sm);
    else
      out.lagrange.counterexamples.push_back(sm);
  }
  if (out.lagrange.witnesses.empty())
    out.lagrange.tag = LagrangeTag::Free;
  else if (out.lagrange.counterexamples.empty())
    out.lagrange.tag = LagrangeTag::Lagrange;
  else
    out.lagrange.tag = LagrangeTag::Weakly;

  for (auto [p, alpha] : prime_powers_of_long(o)) {
    NSylowPrime rec;
    rec.p = p;
    rec.alpha = alpha;
    long exact = 1;
    for (int i = 0; i < alpha; ++i) exact *= p;
    for (const auto& sm : fam.members) {
      if (submulti_is_trivial(ms, sm)) continue;
      if (sm.order() == exact) {
        rec.found = sm;
        break;
      }
    }
    out.sylow.primes.push_back(std::move(rec));
  }
  int found = 0;
  for (const auto& r : out.sylow.primes) found += r.found ? 1 : 0;
  out.sylow.tag = out.sylow.primes.empty() || found == 0
                      ? SylowTag::Free
                      : (found == static_cast<int>(out.sylow.primes.size()) ? SylowTag::Sylow
                                                                            : SylowTag::Weakly);

  bool anti_e = false, anti_t = false, pos_e = false, pos_t = false;
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    auto e = identity_of(c);
    auto target = neutro_target(c);
    for (int x = 0; x < c.order(); ++x) {
      bool trivial = (e && x == *e) || (target && x == *target);
      if (trivial) continue;
      if (e) {
        if (auto k = order_to(c, x, *e)) {
          (o % *k == 0 ? pos_e : anti_e) = true;
          o % *k == 0 ? ++out.cauchy.cauchy_count : ++out.cauchy.anti_count;
        }
      }
      if (target) {
        if (auto k = order_to(c, x, *target)) {
          (o % *k == 0 ? pos_t : anti_t) = true;
          o % *k == 0 ? ++out.cauchy.cauchy_count : ++out.cauchy.anti_count;
        }
      }
    }
  }
  bool any_pos = pos_e || pos_t;
  if (!anti_e && !anti_t && any_pos)
    out.cauchy.tag = CauchyTag::Cauchy;
  else if ((!anti_e) != (!anti_t) && any_pos)
    out.cauchy.tag = CauchyTag::Semi;
  else if (any_pos)
    out.cauchy.tag = CauchyTag::Weakly;
  else
    out.cauchy.tag = CauchyTag::Free;
  return out;
}

TupleSylowReport tuple_sylow(const MultiStructure& ms, const std::vector<long>& primes) {
  const int n = ms.n_components();
  if (static_cast<int>(primes.size()) != n)
    throw error("tuple sylow needs one prime per component");
  TupleSylowReport rep;
  rep.witness.parts.assign(n, IndexSet(0));
  rep.found = true;
  for (int i = 0; i < n; ++i) {
    const Magma& c = ms.component(i);
    long p = primes[i];
    long o = c.order();
    long exact = 1;
    while (o % p == 0) {
      o /= p;
      exact *= p;
    }
    rep.witness.parts[i] = IndexSet(c.order());
    if (exact == 1) {
      rep.found = false;
      continue;
    }
    rep.biorder += exact;
    // prefer a neutrosophic part; fall back to any closed subset of the
    // exact order (plain components have only those)
    bool got = false;
    for (const auto& s : all_closed_subsets(c)) {
      if (s.count() != exact) continue;
      bool neutro = part_is_neutro(c, s);
      if (!got || neutro) {
        rep.witness.parts[i] = s;
        got = true;
        if (neutro) break;
      }
    }
    if (!got) rep.found = false;
  }
  return rep;
}

bool identity_class_multi(const MultiStructure& ms, IdentityName id, IdentityMode mode) {
  bool any_loop = false;
  for (int i = 0; i < ms.n_components(); ++i) {
    const ComponentProfile& p = ms.profile(i);
    if (!(p.cls == ComponentClass::Loop)) continue;
    any_loop = true;
    const Magma& c = ms.component(i);
    if (mode == IdentityMode::WholeStructure) {
      if (!check_identity(c, id).holds) return false;
    } else {
      for (const auto& s : flavored_substructures(c, Flavor::Neutrosophic)) {
        if (s.count() == c.order()) continue;  // proper subsets only
        if (!check_identity_on(c, id, s).holds) return false;
      }
    }
  }
  if (!any_loop) throw error("no-loop-component: identity class asked of a loop-free structure");
  return true;
}

NIdealVerdict n_ideals(const MultiStructure& ms, const SubMulti& s) {
  NIdealVerdict v;
  int maximal = 0, minimal = 0, ideals = 0;
  for (int i = 0; i < ms.n_components(); ++i) {
    const ComponentProfile& p = ms.profile(i);
    if (!p.assoc)
      throw error("kind-mismatch: N-ideal clauses need semigroup components (component " +
                  std::to_string(i + 1) + " is not associative)");
    IdealVerdict iv = ideal_verdict(ms.component(i), s.parts[i]);
    ideals += iv.two_sided ? 1 : 0;
    maximal += iv.maximal ? 1 : 0;
    minimal += iv.minimal ? 1 : 0;
    v.per_component.push_back(iv);
  }
  const int n = ms.n_components();
  v.n_ideal = ideals == n;
  v.maximal = v.n_ideal && maximal == n;
  v.minimal = v.n_ideal && minimal == n;
  v.quasi_maximal = v.n_ideal && maximal >= 1 && maximal < n;
  v.quasi_minimal = v.n_ideal && minimal >= 1 && minimal < n;
  return v;
}

bool is_n_ary_idempotent(const MultiStructure& ms, const std::vector<int>& coords) {
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    if (c.at(coords[i], coords[i]) != coords[i]) return false;
  }
  return true;
}

namespace {

// y-candidates annihilating x two-sidedly in one component
std::vector<int> annihilators(const Magma& c, int x) {
  std::vector<int> ys;
  if (!c.zero()) return ys;
  int z = *c.zero();
  for (int y = 0; y < c.order(); ++y)
    if (c.at(x, y) == z && c.at(y, x) == z) ys.push_back(y);
  return ys;
}

}  // namespace

bool is_n_ary_zero_divisor(const MultiStructure& ms, const std::vector<int>& coords) {
  bool nonzero = false, some_nonzero_partner = false;
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    if (!c.zero()) throw error("missing-zero: component " + std::to_string(i + 1) + " has no zero");
    if (coords[i] != *c.zero()) nonzero = true;
    auto ys = annihilators(c, coords[i]);
    if (ys.empty()) return false;  // no partner at all in this coordinate
    for (int y : ys)
      if (y != *c.zero()) some_nonzero_partner = true;
  }
  return nonzero && some_nonzero_partner;
}

bool is_n_ary_unit(const MultiStructure& ms, const std::vector<int>& coords) {
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    auto e = identity_of(c);
    if (!e) throw error("missing-identity: component " + std::to_string(i + 1) + " has no identity");
    bool ok = false;
    for (int y = 0; y < c.order() && !ok; ++y)
      ok = c.at(coords[i], y) == *e && c.at(y, coords[i]) == *e;
    if (!ok) return false;
  }
  return true;
}

NArySpecialReport n_ary_special(const MultiStructure& ms, size_t tuple_cap, size_t list_cap) {
  NArySpecialReport rep;
  const int n = ms.n_components();
  auto make_tuple = [&](const std::vector<int>& coords) {
    NTuple t;
    t.coords = coords;
    for (int i = 0; i < n; ++i) t.neutro = t.neutro || ms.component(i).element(coords[i]).neutro;
    return t;
  };

  // idempotent tuples: cartesian product of per-component idempotents
  {
    std::vector<std::vector<int>> idem(n);
    size_t count = 1;
    for (int i = 0; i < n; ++i) {
      idem[i] = idempotents(ms.component(i)).to_vector();
      count *= std::max<size_t>(idem[i].size(), 1);
    }
    bool feasible = true;
    for (int i = 0; i < n; ++i) feasible = feasible && !idem[i].empty();
    if (feasible) {
      if (count > tuple_cap) rep.partial = true;
      std::vector<size_t> pick(n, 0);
      while (rep.idempotents.size() < list_cap) {
        std::vector<int> coords(n);
        for (int i = 0; i < n; ++i) coords[i] = idem[i][pick[i]];
        rep.idempotents.push_back(make_tuple(coords));
        int idx = 0;
        while (idx < n) {
          if (++pick[idx] < idem[idx].size()) break;
          pick[idx] = 0;
          ++idx;
        }
        if (idx == n) break;
      }
      if (rep.idempotents.size() >= list_cap) rep.partial = true;
    }
  }

  // zero divisors and units: full tuple enumeration under the cap, else
  // restricted to flagged/special coordinates with the partial flag set
  bool zeros_ok = true, ids_ok = true;
  for (int i = 0; i < n; ++i) {
    zeros_ok = zeros_ok && ms.component(i).zero().has_value();
    ids_ok = ids_ok && identity_of(ms.component(i)).has_value();
  }
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<size_t>(ms.component(i).order());

  // above the tuple cap the scan restricts to flagged and special
  // coordinates and the report is marked partial
  std::vector<std::vector<int>> coord_pool(n);
  for (int i = 0; i < n; ++i) {
    const Magma& c = ms.component(i);
    if (total <= tuple_cap) {
      coord_pool[i].resize(c.order());
      std::iota(coord_pool[i].begin(), coord_pool[i].end(), 0);
    } else {
      rep.partial = true;
      IndexSet cand = idempotents(c);
      for (int x = 0; x < c.order(); ++x)
        if (c.element(x).neutro) cand.add(x);
      if (c.zero()) cand.add(*c.zero());
      if (auto e = identity_of(c)) cand.add(*e);
      coord_pool[i] = cand.to_vector();
    }
  }
  auto scan_tuples = [&](auto&& visit) {
    std::vector<size_t> pick(n, 0);
    std::vector<int> coords(n);
    while (true) {
      for (int i = 0; i < n; ++i) coords[i] = coord_pool[i][pick[i]];
      visit(coords);
      int idx = 0;
      while (idx < n) {
        if (++pick[idx] < coord_pool[idx].size()) break;
        pick[idx] = 0;
        ++idx;
      }
      if (idx == n) break;
    }
  };

  if (zeros_ok) {
    scan_tuples([&](const std::vector<int>& coords) {
      if (rep.zero_divisor_pairs.size() >= list_cap || !is_n_ary_zero_divisor(ms, coords)) return;
      // one witness partner, nonzero somewhere
      std::vector<int> partner(n);
      bool have_nonzero = false;
      for (int i = 0; i < n; ++i) {
        auto ys = annihilators(ms.component(i), coords[i]);
        partner[i] = ys.front();
        for (int y : ys)
          if (y != *ms.component(i).zero() && !have_nonzero) {
            partner[i] = y;
            have_nonzero = true;
            break;
          }
      }
      rep.zero_divisor_pairs.emplace_back(make_tuple(coords), make_tuple(partner));
    });
    if (rep.zero_divisor_pairs.size() >= list_cap) rep.partial = true;
  }
  if (ids_ok) {
    scan_tuples([&](const std::vector<int>& coords) {
      if (rep.units.size() >= list_cap) return;
      if (is_n_ary_unit(ms, coords)) rep.units.push_back(make_tuple(coords));
    });
    if (rep.units.size() >= list_cap) rep.partial = true;
  }
  return rep;
}

NHomVerdict verify_n_homomorphism(const MultiStructure& src, const MultiStructure& dst,
                                  const std::vector<std::vector<int>>& maps) {
  NHomVerdict v;
  if (src.n_components() != dst.n_components()) {
    v.reason = "kind-misalignment: component counts differ";
    return v;
  }
  const int n = src.n_components();
  if (static_cast<int>(maps.size()) != n) {
    v.reason = "map list does not match component count";
    return v;
  }
  v.kernel.parts.assign(n, IndexSet(0));
  for (int i = 0; i < n; ++i) {
    const Magma& a = src.component(i);
    const Magma& b = dst.component(i);
    v.kernel.parts[i] = IndexSet(a.order());
    if (src.profile(i).cls != dst.profile(i).cls) {
      v.reason = "kind-misalignment: component " + std::to_string(i + 1) +
                 " maps across structural kinds";
      return v;
    }
    const auto& f = maps[i];
    if (static_cast<int>(f.size()) != a.order()) {
      v.reason = "map on component " + std::to_string(i + 1) + " is not total";
      return v;
    }
    for (int x : f)
      if (x < 0 || x >= b.order()) {
        v.reason = "map on component " + std::to_string(i + 1) + " leaves the codomain";
        return v;
      }
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (f[a.at(x, y)] != b.at(f[x], f[y])) {
          v.reason = "product not preserved in component " + std::to_string(i + 1) + " at (" +
                     a.label(x) + "," + a.label(y) + ")";
          return v;
        }
    for (int x = 0; x < a.order(); ++x)
      if (a.element(x).neutro != b.element(f[x]).neutro) {
        v.reason = "indeterminacy flag not preserved in component " + std::to_string(i + 1) +
                   " at " + a.label(x);
        return v;
      }
    auto ia = neutro_target(a), ib = neutro_target(b);
    if (ia && (!ib || f[*ia] != *ib)) {
      v.reason = "component " + std::to_string(i + 1) + " does not send I to I";
      return v;
    }
    if (auto e = identity_of(b)) {
      for (int x = 0; x < a.order(); ++x)
        if (f[x] == *e) v.kernel.parts[i].add(x);
    }
  }
  v.ok = true;
  return v;
}

SubMulti bicoset(const MultiStructure& ms, const SubMulti& h, int comp, int a, Side side) {
  if (comp < 0 || comp >= ms.n_components())
    throw error("membership-spec-invalid: no component " + std::to_string(comp + 1));
  const Magma& c = ms.component(comp);
  if (a < 0 || a >= c.order())
    throw error("membership-spec-invalid: element foreign to component " +
                std::to_string(comp + 1));
  SubMulti out = h;
  out.parts[comp] = side == Side::Right ? right_translate(c, h.parts[comp], a)
                                        : left_translate(c, a, h.parts[comp]);
  return out;
}

HKCheck hk_product_check(const MultiStructure& ms, const SubMulti& h, const SubMulti& k) {
  HKCheck out;
  out.hk_closed = true;
  out.componentwise_commute = true;
  for (int i = 0; i < ms.n_components(); ++i) {
    const Magma& c = ms.component(i);
    IndexSet hk = set_product(c, h.parts[i], k.parts[i]);
    IndexSet kh = set_product(c, k.parts[i], h.parts[i]);
    bool commute = hk == kh;
    out.commute.push_back(commute);
    out.componentwise_commute = out.componentwise_commute && commute;
    if (!is_closed(c, hk)) out.hk_closed = false;
  }
  return out;
}

std::string to_text(const MultiStructure& ms) {
  std::ostringstream os;
  std::string name = ms.name();
  for (char& c : name)
    if (c == ' ') c = '_';
  os << "multi " << name << " N=" << ms.n_components() << "\n";
  for (int i = 0; i < ms.n_components(); ++i) {
    os << "component " << (i + 1) << " kind=" << kind_name(ms.component(i).kind()) << "\n";
    os << to_text(ms.component(i));
  }
  return os.str();
}

MultiStructure parse_multi(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw error("parse: empty multi text");
  std::istringstream head(line);
  std::string word, name, ntag;
  head >> word >> name >> ntag;
  if (word != "multi" || ntag.rfind("N=", 0) != 0) throw error("parse: bad multi header");
  int n = std::atoi(ntag.c_str() + 2);
  std::vector<Magma> comps;
  std::string block;
  auto flush = [&]() {
    if (!block.empty()) {
      comps.push_back(parse_magma(block));
      block.clear();
    }
  };
  while (std::getline(is, line)) {
    if (line.rfind("component ", 0) == 0) {
      flush();
      continue;
    }
    if (!line.empty()) block += line + "\n";
  }
  flush();
  if (static_cast<int>(comps.size()) != n) throw error("parse: component count mismatch");
  return MultiStructure(name, std::move(comps));
}

std::string render_submulti(const MultiStructure& ms, const SubMulti& s) {
  std::string out;
  for (int i = 0; i < ms.n_components(); ++i) {
    if (i) out += " | ";
    out += s.parts[i].empty() ? std::string("phi") : render_subset(ms.component(i), s.parts[i]);
  }
  return out;
}

}  // namespace nalg
