#include "nalg/magma.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nalg {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Group: return "group";
    case Kind::Loop: return "loop";
    case Kind::Monoid: return "monoid";
    case Kind::Semigroup: return "semigroup";
    case Kind::Groupoid: return "groupoid";
  }
  return "groupoid";
}

Kind kind_from_name(std::string_view s) {
  if (s == "group") return Kind::Group;
  if (s == "loop") return Kind::Loop;
  if (s == "monoid") return Kind::Monoid;
  if (s == "semigroup") return Kind::Semigroup;
  if (s == "groupoid") return Kind::Groupoid;
  throw error("unknown kind tag: " + std::string(s));
}

namespace {

bool table_is_latin(const Magma& m) {
  const int k = m.order();
  std::vector<char> seen(k);
  for (int r = 0; r < k; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < k; ++c) {
      int v = m.at(r, c);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int c = 0; c < k; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < k; ++r) {
      int v = m.at(r, c);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool table_is_associative(const Magma& m) {
  const int k = m.order();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int ab = m.at(a, b);
      for (int c = 0; c < k; ++c)
        if (m.at(ab, c) != m.at(a, m.at(b, c))) return false;
    }
  return true;
}

}  // namespace

Magma::Magma(std::string name, Kind kind, std::vector<Element> elements,
             std::vector<uint16_t> table, std::optional<int> zero)
    : order_(static_cast<int>(elements.size())),
      kind_(kind),
      name_(std::move(name)),
      elements_(std::move(elements)),
      table_(std::move(table)),
      zero_(zero) {
  if (order_ <= 0) throw error("magma must be nonempty");
  if (table_.size() != static_cast<size_t>(order_) * order_)
    throw error("table size mismatch for magma " + name_);
  for (uint16_t v : table_)
    if (v >= order_) throw error("table entry out of range in magma " + name_);
  std::unordered_set<std::string> labels;
  for (int i = 0; i < order_; ++i) {
    elements_[i].index = i;
    if (!labels.insert(elements_[i].label).second)
      throw error("duplicate label '" + elements_[i].label + "' in magma " + name_);
  }
  if (zero_ && (*zero_ < 0 || *zero_ >= order_)) throw error("zero index out of range");

  // declared-kind invariants
  bool need_assoc = kind_ == Kind::Group || kind_ == Kind::Monoid || kind_ == Kind::Semigroup;
  bool need_latin = kind_ == Kind::Group || kind_ == Kind::Loop;
  bool need_id = kind_ != Kind::Semigroup && kind_ != Kind::Groupoid;
  if (need_latin && !table_is_latin(*this))
    throw error("kind-invariant: " + name_ + " declared " + std::string(kind_name(kind_)) +
                " but table is not a Latin square");
  if (need_assoc && !table_is_associative(*this))
    throw error("kind-invariant: " + name_ + " declared " + std::string(kind_name(kind_)) +
                " but product is not associative");
  if (need_id && !identity_of(*this))
    throw error("kind-invariant: " + name_ + " declared " + std::string(kind_name(kind_)) +
                " but has no two-sided identity");
}

std::optional<int> Magma::index_of(std::string_view label) const {
  for (const auto& e : elements_)
    if (e.label == label) return e.index;
  return std::nullopt;
}

bool Magma::has_neutro_element() const {
  for (const auto& e : elements_)
    if (e.neutro) return true;
  return false;
}

std::string_view identity_name(IdentityName id) {
  switch (id) {
    case IdentityName::Moufang1: return "Moufang1";
    case IdentityName::Moufang2: return "Moufang2";
    case IdentityName::Moufang3: return "Moufang3";
    case IdentityName::Bol: return "Bol";
    case IdentityName::BruckA: return "BruckA";
    case IdentityName::LeftAlternative: return "LeftAlternative";
    case IdentityName::RightAlternative: return "RightAlternative";
    case IdentityName::WIP: return "WIP";
    case IdentityName::PGroupoid: return "PGroupoid";
    case IdentityName::IdempotentLaw: return "IdempotentLaw";
    case IdentityName::Commutativity: return "Commutativity";
    case IdentityName::Associativity: return "Associativity";
  }
  return "?";
}

std::optional<IdentityName> identity_from_name(std::string_view s) {
  for (IdentityName id : all_identities())
    if (identity_name(id) == s) return id;
  return std::nullopt;
}

const std::vector<IdentityName>& all_identities() {
  static const std::vector<IdentityName> ids = {
      IdentityName::Moufang1,         IdentityName::Moufang2,
      IdentityName::Moufang3,         IdentityName::Bol,
      IdentityName::BruckA,           IdentityName::LeftAlternative,
      IdentityName::RightAlternative, IdentityName::WIP,
      IdentityName::PGroupoid,        IdentityName::IdempotentLaw,
      IdentityName::Commutativity,    IdentityName::Associativity};
  return ids;
}

int apply(const Magma& m, int a, int b) {
  if (a < 0 || a >= m.order() || b < 0 || b >= m.order())
    throw std::out_of_range("apply: element foreign to magma " + m.name());
  return m.at(a, b);
}

std::optional<int> identity_of(const Magma& m) {
  const int k = m.order();
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) ok = m.at(e, a) == a && m.at(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

IndexSet left_identities(const Magma& m) {
  const int k = m.order();
  IndexSet s(k);
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) ok = m.at(e, a) == a;
    if (ok) s.add(e);
  }
  return s;
}

IndexSet right_identities(const Magma& m) {
  const int k = m.order();
  IndexSet s(k);
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) ok = m.at(a, e) == a;
    if (ok) s.add(e);
  }
  return s;
}

int left_power(const Magma& m, int x, int k) {
  if (k < 1) throw error("left_power: exponent must be positive");
  int p = x;
  for (int i = 1; i < k; ++i) p = m.at(p, x);
  return p;
}

std::optional<int> order_to(const Magma& m, int x, int target) {
  int p = x;
  for (int k = 1; k <= m.order(); ++k) {
    if (p == target) return k;
    p = m.at(p, x);
  }
  return std::nullopt;
}

namespace {

// lhs/rhs of each identity at a tuple (x, y, z); z ignored for the
// two-variable laws.
struct IdentityEval {
  int vars;
  int (*lhs)(const Magma&, int, int, int);
  int (*rhs)(const Magma&, int, int, int);
};

IdentityEval identity_eval(IdentityName id) {
  using M = const Magma&;
  switch (id) {
    case IdentityName::Moufang1:  // (xy)(zx) = (x(yz))x
      return {3, [](M m, int x, int y, int z) { return m.at(m.at(x, y), m.at(z, x)); },
              [](M m, int x, int y, int z) { return m.at(m.at(x, m.at(y, z)), x); }};
    case IdentityName::Moufang2:  // ((xy)z)y = x(y(zy))
      return {3, [](M m, int x, int y, int z) { return m.at(m.at(m.at(x, y), z), y); },
              [](M m, int x, int y, int z) { return m.at(x, m.at(y, m.at(z, y))); }};
    case IdentityName::Moufang3:  // x(y(xz)) = ((xy)x)z
      return {3, [](M m, int x, int y, int z) { return m.at(x, m.at(y, m.at(x, z))); },
              [](M m, int x, int y, int z) { return m.at(m.at(m.at(x, y), x), z); }};
    case IdentityName::Bol:  // ((xy)z)y = x((yz)y)
      return {3, [](M m, int x, int y, int z) { return m.at(m.at(m.at(x, y), z), y); },
              [](M m, int x, int y, int z) { return m.at(x, m.at(m.at(y, z), y)); }};
    case IdentityName::BruckA:  // (x(yx))z = x(y(xz))
      return {3, [](M m, int x, int y, int z) { return m.at(m.at(x, m.at(y, x)), z); },
              [](M m, int x, int y, int z) { return m.at(x, m.at(y, m.at(x, z))); }};
    case IdentityName::LeftAlternative:  // (xx)y = x(xy)
      return {2, [](M m, int x, int y, int) { return m.at(m.at(x, x), y); },
              [](M m, int x, int y, int) { return m.at(x, m.at(x, y)); }};
    case IdentityName::RightAlternative:  // (xy)y = x(yy)
      return {2, [](M m, int x, int y, int) { return m.at(m.at(x, y), y); },
              [](M m, int x, int y, int) { return m.at(x, m.at(y, y)); }};
    case IdentityName::PGroupoid:  // (xy)x = x(yx)
      return {2, [](M m, int x, int y, int) { return m.at(m.at(x, y), x); },
              [](M m, int x, int y, int) { return m.at(x, m.at(y, x)); }};
    case IdentityName::IdempotentLaw:  // xx = x
      return {1, [](M m, int x, int, int) { return m.at(x, x); },
              [](M, int x, int, int) { return x; }};
    case IdentityName::Commutativity:  // xy = yx
      return {2, [](M m, int x, int y, int) { return m.at(x, y); },
              [](M m, int x, int y, int) { return m.at(y, x); }};
    case IdentityName::Associativity:  // (xy)z = x(yz)
      return {3, [](M m, int x, int y, int z) { return m.at(m.at(x, y), z); },
              [](M m, int x, int y, int z) { return m.at(x, m.at(y, z)); }};
    case IdentityName::WIP:
      break;  // handled separately
  }
  throw error("identity has no direct evaluator");
}

IdentityVerdict check_wip(const Magma& m, const std::vector<int>& members) {
  auto e = identity_of(m);
  if (!e) throw error("missing-identity: WIP needs a two-sided identity in " + m.name());
  IdentityVerdict v;
  for (int x : members)
    for (int y : members) {
      int xy = m.at(x, y);
      for (int z : members) {
        if (m.at(xy, z) != *e) continue;
        if (m.at(x, m.at(y, z)) != *e) {
          v.holds = false;
          v.witness = {x, y, z};
          v.lhs = m.at(x, m.at(y, z));
          v.rhs = *e;
          return v;
        }
      }
    }
  return v;
}

IdentityVerdict check_identity_impl(const Magma& m, IdentityName id,
                                    const std::vector<int>& members) {
  if (id == IdentityName::WIP) return check_wip(m, members);
  IdentityEval ev = identity_eval(id);
  IdentityVerdict v;
  if (ev.vars == 1) {
    for (int x : members) {
      int l = ev.lhs(m, x, 0, 0), r = ev.rhs(m, x, 0, 0);
      if (l != r) return {false, {x, -1, -1}, l, r};
    }
  } else if (ev.vars == 2) {
    for (int x : members)
      for (int y : members) {
        int l = ev.lhs(m, x, y, 0), r = ev.rhs(m, x, y, 0);
        if (l != r) return {false, {x, y, -1}, l, r};
      }
  } else {
    for (int x : members)
      for (int y : members)
        for (int z : members) {
          int l = ev.lhs(m, x, y, z), r = ev.rhs(m, x, y, z);
          if (l != r) return {false, {x, y, z}, l, r};
        }
  }
  return v;
}

}  // namespace

IdentityVerdict check_identity(const Magma& m, IdentityName id) {
  std::vector<int> members(m.order());
  std::iota(members.begin(), members.end(), 0);
  return check_identity_impl(m, id, members);
}

IdentityVerdict check_identity_on(const Magma& m, IdentityName id, const IndexSet& s) {
  if (!is_closed(m, s)) throw error("not-closed: identity check on a non-closed subset");
  return check_identity_impl(m, id, s.to_vector());
}

Kind classify_kind(const Magma& m) {
  bool assoc = table_is_associative(m);
  bool latin = table_is_latin(m);
  bool id = identity_of(m).has_value();
  if (assoc) {
    if (id && latin) return Kind::Group;
    if (id) return Kind::Monoid;
    return Kind::Semigroup;
  }
  if (id && latin) return Kind::Loop;
  return Kind::Groupoid;
}

bool is_closed(const Magma& m, const IndexSet& s) {
  auto v = s.to_vector();
  for (int a : v)
    for (int b : v)
      if (!s.test(m.at(a, b))) return false;
  return true;
}

IndexSet closure(const Magma& m, IndexSet seed) {
  std::vector<int> work = seed.to_vector();
  std::vector<int> members = work;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    size_t n = members.size();
    for (size_t i = 0; i < n; ++i) {
      int y = members[i];
      for (int p : {m.at(x, y), m.at(y, x)}) {
        if (!seed.test(p)) {
          seed.add(p);
          members.push_back(p);
          work.push_back(p);
        }
      }
    }
    int xx = m.at(x, x);
    if (!seed.test(xx)) {
      seed.add(xx);
      members.push_back(xx);
      work.push_back(xx);
    }
  }
  return seed;
}

int magma_order_cap() {
  if (const char* s = std::getenv("MAGMA_ORDER_CAP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 64;
}

namespace {

constexpr size_t kLatticeCountCap = 250000;

std::vector<IndexSet> closed_subsets_bfs(const Magma& m, const IndexSet& universe) {
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::deque<IndexSet> queue;
  auto push = [&](const IndexSet& s) {
    if (seen.insert(s).second) {
      if (seen.size() > kLatticeCountCap) throw error("cap-exceeded: closed-subset lattice too large");
      queue.push_back(s);
    }
  };
  universe.for_each([&](int x) {
    IndexSet s(m.order());
    s.add(x);
    push(closure(m, s));
  });
  std::vector<int> uni = universe.to_vector();
  while (!queue.empty()) {
    IndexSet t = queue.front();
    queue.pop_front();
    for (int x : uni) {
      if (t.test(x)) continue;
      IndexSet u = t;
      u.add(x);
      push(closure(m, u));
    }
  }
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

// Closed subsets of a loop-doubling extension decompose as A u CI with
// A, C closed in the base block and A.C, C.A inside C. Enumerating the
// base lattice once and combining is exhaustive (checked against the
// generic search in the tests) and much faster.
std::vector<IndexSet> closed_subsets_doubling(const Magma& m) {
  const int b = m.base_order;
  IndexSet base(m.order());
  for (int i = 0; i < b; ++i) base.add(i);
  std::vector<IndexSet> base_closed = closed_subsets_bfs(m, base);

  auto flagged_of = [&](const IndexSet& c) {
    IndexSet f(m.order());
    c.for_each([&](int i) { f.add(i + b); });
    return f;
  };
  auto mixed_ok = [&](const IndexSet& a, const IndexSet& c) {
    // products of unflagged a with flagged c must have base labels in c
    bool ok = true;
    a.for_each([&](int x) {
      if (!ok) return;
      c.for_each([&](int y) {
        if (!ok) return;
        if (!c.test(m.at(x, y)) || !c.test(m.at(y, x))) ok = false;
      });
    });
    return ok;
  };

  std::vector<IndexSet> out;
  for (const auto& a : base_closed) out.push_back(a);
  for (const auto& c : base_closed) out.push_back(flagged_of(c));
  for (const auto& a : base_closed)
    for (const auto& c : base_closed)
      if (mixed_ok(a, c)) out.push_back(a | flagged_of(c));
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x < y;
  });
  return out;
}

}  // namespace

std::vector<IndexSet> all_closed_subsets(const Magma& m) {
  if (m.order() > magma_order_cap())
    throw error("cap-exceeded: order " + std::to_string(m.order()) + " above lattice cap " +
                std::to_string(magma_order_cap()));
  if (m.construction == NeutroConstruction::LoopDoubling && m.base_order * 2 == m.order())
    return closed_subsets_doubling(m);
  return closed_subsets_bfs(m, IndexSet::full(m.order()));
}

IndexSet set_product(const Magma& m, const IndexSet& a, const IndexSet& b) {
  IndexSet r(m.order());
  a.for_each([&](int x) { b.for_each([&](int y) { r.add(m.at(x, y)); }); });
  return r;
}

IndexSet left_translate(const Magma& m, int x, const IndexSet& h) {
  IndexSet r(m.order());
  h.for_each([&](int a) { r.add(m.at(x, a)); });
  return r;
}

IndexSet right_translate(const Magma& m, const IndexSet& h, int x) {
  IndexSet r(m.order());
  h.for_each([&](int a) { r.add(m.at(a, x)); });
  return r;
}

bool is_normal_sub(const Magma& m, const IndexSet& h) {
  if (!is_closed(m, h)) throw error("not-closed: normality asked of a non-closed subset");
  const int k = m.order();
  for (int x = 0; x < k; ++x)
    if (left_translate(m, x, h) != right_translate(m, h, x)) return false;
  for (int x = 0; x < k; ++x) {
    IndexSet hx = right_translate(m, h, x);
    IndexSet xh = left_translate(m, x, h);
    for (int y = 0; y < k; ++y) {
      if (right_translate(m, hx, y) != right_translate(m, h, m.at(x, y))) return false;
      if (left_translate(m, y, xh) != left_translate(m, m.at(y, x), h)) return false;
    }
  }
  return true;
}

namespace {

// Neutrosophic subloops of a loop-doubling extension: H u HI with H a
// closed subset of the base loop (the generated-by-H-and-I form).
std::vector<IndexSet> doubling_subloops(const Magma& m, bool include_full) {
  const int b = m.base_order;
  IndexSet base(m.order());
  for (int i = 0; i < b; ++i) base.add(i);
  std::vector<IndexSet> base_closed = closed_subsets_bfs(m, base);
  std::vector<IndexSet> out;
  for (const auto& h : base_closed) {
    if (!include_full && h.count() == b) continue;
    IndexSet s = h;
    h.for_each([&](int i) { s.add(i + b); });
    out.push_back(s);
  }
  return out;
}

}  // namespace

bool is_simple(const Magma& m) {
  if (m.construction == NeutroConstruction::LoopDoubling) {
    for (const auto& s : doubling_subloops(m, false)) {
      if (s.count() <= 2) continue;  // {e, eI} is trivial
      if (is_normal_sub(m, s)) return false;
    }
    return true;
  }
  for (const auto& s : all_closed_subsets(m)) {
    if (s.count() <= 1 || s.count() == m.order()) continue;
    if (is_normal_sub(m, s)) return false;
  }
  return true;
}

CosetFamily cosets(const Magma& m, const IndexSet& h, Side side) {
  if (!is_closed(m, h)) throw error("not-closed: coset family of a non-closed subset");
  CosetFamily fam;
  for (int a = 0; a < m.order(); ++a) {
    IndexSet c = side == Side::Right ? right_translate(m, h, a) : left_translate(m, a, h);
    fam.cosets.emplace_back(a, c);
  }
  std::vector<IndexSet> distinct;
  for (auto& [a, c] : fam.cosets)
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  int total = 0;
  bool ok = true;
  int sz = distinct.empty() ? 0 : distinct.front().count();
  for (size_t i = 0; i < distinct.size() && ok; ++i) {
    if (distinct[i].count() != sz) ok = false;
    total += distinct[i].count();
    for (size_t j = i + 1; j < distinct.size() && ok; ++j)
      if (distinct[i].intersects(distinct[j])) ok = false;
  }
  fam.partition = ok && total == m.order();
  return fam;
}

IndexSet ideal_closure(const Magma& m, IndexSet seed) {
  std::vector<int> work = seed.to_vector();
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (int x = 0; x < m.order(); ++x) {
      for (int p : {m.at(x, a), m.at(a, x)}) {
        if (!seed.test(p)) {
          seed.add(p);
          work.push_back(p);
        }
      }
    }
  }
  return seed;
}

IdealVerdict ideal_verdict(const Magma& m, const IndexSet& p) {
  if (!is_closed(m, p)) throw error("not-closed: ideal verdict of a non-closed subset");
  IdealVerdict v;
  v.left = v.right = true;
  p.for_each([&](int a) {
    for (int x = 0; x < m.order(); ++x) {
      if (!p.test(m.at(x, a))) v.left = false;
      if (!p.test(m.at(a, x))) v.right = false;
    }
  });
  v.two_sided = v.left && v.right;
  if (!v.two_sided) return v;

  const IndexSet full = IndexSet::full(m.order());
  if (p != full) {
    v.maximal = true;
    for (int x = 0; x < m.order() && v.maximal; ++x) {
      if (p.test(x)) continue;
      IndexSet grown = p;
      grown.add(x);
      if (ideal_closure(m, grown) != full) v.maximal = false;
    }
  }
  v.minimal = true;
  p.for_each([&](int x) {
    IndexSet gen(m.order());
    gen.add(x);
    if (ideal_closure(m, gen) != p) v.minimal = false;
  });
  v.principal = false;
  p.for_each([&](int g) {
    if (v.principal) return;
    IndexSet gen(m.order());
    gen.add(g);
    if (ideal_closure(m, gen) == p) v.principal = true;
  });
  return v;
}

IndexSet idempotents(const Magma& m) {
  IndexSet s(m.order());
  for (int x = 0; x < m.order(); ++x)
    if (m.at(x, x) == x) s.add(x);
  return s;
}

IndexSet zero_divisors(const Magma& m) {
  if (!m.zero()) throw error("no-zero-designated: zero divisors need a designated zero in " + m.name());
  const int z = *m.zero();
  IndexSet s(m.order());
  for (int x = 0; x < m.order(); ++x) {
    if (x == z) continue;
    for (int y = 0; y < m.order(); ++y) {
      if (y == z) continue;
      if (m.at(x, y) == z || m.at(y, x) == z) {
        s.add(x);
        break;
      }
    }
  }
  return s;
}

IndexSet units(const Magma& m) {
  auto e = identity_of(m);
  if (!e) throw error("no-identity: units need a two-sided identity in " + m.name());
  IndexSet s(m.order());
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      if (m.at(x, y) == *e && m.at(y, x) == *e) {
        s.add(x);
        break;
      }
  return s;
}

IndexSet commutant(const Magma& m) {
  IndexSet s(m.order());
  for (int a = 0; a < m.order(); ++a) {
    bool ok = true;
    for (int x = 0; x < m.order() && ok; ++x) ok = m.at(a, x) == m.at(x, a);
    if (ok) s.add(a);
  }
  return s;
}

IndexSet center(const Magma& m) {
  IndexSet s(m.order());
  commutant(m).for_each([&](int a) {
    for (int x = 0; x < m.order(); ++x)
      for (int y = 0; y < m.order(); ++y) {
        int xy = m.at(x, y);
        if (m.at(a, xy) != m.at(m.at(a, x), y)) return;
        if (m.at(m.at(a, x), y) != m.at(x, m.at(a, y))) return;
        if (m.at(x, m.at(a, y)) != m.at(m.at(x, a), y)) return;
        if (m.at(xy, a) != m.at(x, m.at(y, a))) return;
      }
    s.add(a);
  });
  return s;
}

namespace {

// Unique c with (base)*c = target; requires the row of base to be a
// permutation (loop-kind).
int solve_right(const Magma& m, int base, int target) {
  for (int c = 0; c < m.order(); ++c)
    if (m.at(base, c) == target) return c;
  throw error("row of " + m.label(base) + " does not reach " + m.label(target));
}

}  // namespace

CommutatorAssociator commutator_associator(const Magma& m) {
  if (classify_kind(m) != Kind::Loop && classify_kind(m) != Kind::Group)
    throw error("not-a-loop: commutator/associator need unique division in " + m.name());
  CommutatorAssociator r{IndexSet(m.order()), IndexSet(m.order()), IndexSet(m.order()),
                         IndexSet(m.order())};
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      r.commutators.add(solve_right(m, m.at(y, x), m.at(x, y)));
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      for (int z = 0; z < m.order(); ++z)
        r.associators.add(solve_right(m, m.at(x, m.at(y, z)), m.at(m.at(x, y), z)));
  r.commutator_closure = closure(m, r.commutators);
  r.associator_closure = closure(m, r.associators);
  return r;
}

Magma direct_product(const std::vector<const Magma*>& parts) {
  if (parts.empty()) throw error("direct product of an empty list");
  long order = 1;
  for (const Magma* p : parts) {
    order *= p->order();
    if (order > magma_order_cap())
      throw error("cap-exceeded: direct product order exceeds " + std::to_string(magma_order_cap()));
  }
  const int k = static_cast<int>(order);
  const int n = static_cast<int>(parts.size());

  std::vector<int> radix(n);
  for (int i = 0; i < n; ++i) radix[i] = parts[i]->order();
  auto decode = [&](int idx, std::vector<int>& digits) {
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = idx % radix[i];
      idx /= radix[i];
    }
  };
  auto encode = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * radix[i] + digits[i];
    return idx;
  };

  std::vector<Element> elems(k);
  std::vector<int> digits(n);
  bool zero_ok = true;
  std::vector<int> zero_digits(n);
  for (int i = 0; i < n; ++i) {
    if (parts[i]->zero())
      zero_digits[i] = *parts[i]->zero();
    else
      zero_ok = false;
  }
  for (int idx = 0; idx < k; ++idx) {
    decode(idx, digits);
    std::string label = "(";
    bool neutro = false;
    for (int i = 0; i < n; ++i) {
      if (i) label += ",";
      label += parts[i]->label(digits[i]);
      neutro = neutro || parts[i]->element(digits[i]).neutro;
    }
    label += ")";
    elems[idx] = Element{idx, label, neutro};
  }

  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  std::vector<int> da(n), db(n), dc(n);
  for (int a = 0; a < k; ++a) {
    decode(a, da);
    for (int b = 0; b < k; ++b) {
      decode(b, db);
      for (int i = 0; i < n; ++i) dc[i] = parts[i]->at(da[i], db[i]);
      table[a * k + b] = static_cast<uint16_t>(encode(dc));
    }
  }

  // weakest component kind: and-combine the structural guarantees
  bool assoc = true, latin = true, id = true;
  for (const Magma* p : parts) {
    Kind kk = p->kind();
    assoc = assoc && (kk == Kind::Group || kk == Kind::Monoid || kk == Kind::Semigroup);
    latin = latin && (kk == Kind::Group || kk == Kind::Loop);
    id = id && (kk == Kind::Group || kk == Kind::Loop || kk == Kind::Monoid);
  }
  Kind kind = assoc ? (id && latin ? Kind::Group : id ? Kind::Monoid : Kind::Semigroup)
                    : (id && latin ? Kind::Loop : Kind::Groupoid);

  std::string name;
  for (int i = 0; i < n; ++i) {
    if (i) name += "x";
    name += parts[i]->name();
  }
  std::optional<int> zero;
  if (zero_ok) zero = encode(zero_digits);
  return Magma(name, kind, std::move(elems), std::move(table), zero);
}

namespace {

int iso_cap() {
  if (const char* s = std::getenv("MAGMA_ISO_CAP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 32;
}

// 1-dimensional refinement colouring of the multiplication table.
std::vector<uint64_t> table_colors(const Magma& m) {
  const int k = m.order();
  std::vector<uint64_t> col(k), next(k);
  for (int x = 0; x < k; ++x) col[x] = (m.at(x, x) == x) ? 1 : 0;
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  for (int round = 0; round < k; ++round) {
    for (int x = 0; x < k; ++x) {
      std::vector<uint64_t> sig;
      sig.reserve(k);
      for (int y = 0; y < k; ++y) sig.push_back(mix(mix(col[y], col[m.at(x, y)] * 3), col[m.at(y, x)] * 5));
      std::sort(sig.begin(), sig.end());
      uint64_t h = col[x] * 7;
      for (uint64_t s : sig) h = mix(h, s);
      next[x] = h;
    }
    if (next == col) break;
    col = next;
  }
  return col;
}

bool extend_iso(const Magma& a, const Magma& b, std::vector<int>& f, std::vector<char>& used,
                const std::vector<int>& order_of_assignment,
                const std::vector<std::vector<int>>& candidates, size_t pos) {
  if (pos == order_of_assignment.size()) return true;
  int x = order_of_assignment[pos];
  for (int y : candidates[x]) {
    if (used[y]) continue;
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q) {
      int w = order_of_assignment[q];
      int xw = a.at(x, w), wx = a.at(w, x);
      if (f[xw] >= 0 && f[xw] != b.at(y, f[w])) ok = false;
      if (ok && f[wx] >= 0 && f[wx] != b.at(f[w], y)) ok = false;
    }
    int xx = a.at(x, x);
    if (ok && f[xx] >= 0 && f[xx] != b.at(y, y)) ok = false;
    if (!ok) continue;
    f[x] = y;
    used[y] = 1;
    if (extend_iso(a, b, f, used, order_of_assignment, candidates, pos + 1)) return true;
    f[x] = -1;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Magma& m1, const Magma& m2) {
  if (m1.order() > iso_cap() || m2.order() > iso_cap())
    throw error("cap-exceeded: isomorphism search capped at order " + std::to_string(iso_cap()));
  if (m1.order() != m2.order()) return std::nullopt;
  const int k = m1.order();

  std::vector<uint64_t> c1 = table_colors(m1), c2 = table_colors(m2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (c1[x] == c2[y]) candidates[x].push_back(y);

  std::vector<int> order_of_assignment(k);
  std::iota(order_of_assignment.begin(), order_of_assignment.end(), 0);
  std::sort(order_of_assignment.begin(), order_of_assignment.end(),
            [&](int a, int b) { return candidates[a].size() < candidates[b].size(); });

  std::vector<int> f(k, -1);
  std::vector<char> used(k, 0);
  if (!extend_iso(m1, m2, f, used, order_of_assignment, candidates, 0)) return std::nullopt;
  // full verification
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (f[m1.at(a, b)] != m2.at(f[a], f[b])) return std::nullopt;
  return f;
}

Magma principal_isotope(const Magma& m, int a, int b) {
  Kind kk = classify_kind(m);
  if (kk != Kind::Loop && kk != Kind::Group)
    throw error("not-a-loop: principal isotope needs unique division in " + m.name());
  const int k = m.order();
  std::vector<int> col_inv(k), row_inv(k);  // X with X*a = x ; Y with b*Y = y
  for (int x = 0; x < k; ++x) {
    col_inv[m.at(x, a)] = x;
    row_inv[m.at(b, x)] = x;
  }
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      table[x * k + y] = static_cast<uint16_t>(m.at(col_inv[x], row_inv[y]));
  std::vector<Element> elems = m.elements();
  return Magma(m.name() + ".isotope(" + m.label(a) + "," + m.label(b) + ")", Kind::Loop,
               std::move(elems), std::move(table));
}

std::vector<int> right_translation(const Magma& m, int a) {
  std::vector<int> p(m.order());
  for (int x = 0; x < m.order(); ++x) p[x] = m.at(x, a);
  return p;
}

std::string to_text(const Magma& m) {
  std::ostringstream os;
  std::string name = m.name();
  for (char& c : name)
    if (c == ' ') c = '_';
  os << "magma " << name << " kind=" << kind_name(m.kind()) << " order=" << m.order() << "\n";
  for (int i = 0; i < m.order(); ++i) os << (i ? " " : "") << m.label(i);
  os << "\n";
  for (int r = 0; r < m.order(); ++r) {
    for (int c = 0; c < m.order(); ++c) os << (c ? " " : "") << m.label(m.at(r, c));
    os << "\n";
  }
  if (m.zero()) os << "zero=" << m.label(*m.zero()) << "\n";
  return os.str();
}

Magma parse_magma(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string word, name, kindtag, ordertag;
  if (!(is >> word) || word != "magma") throw error("parse: expected 'magma' header");
  if (!(is >> name >> kindtag >> ordertag)) throw error("parse: truncated magma header");
  if (kindtag.rfind("kind=", 0) != 0 || ordertag.rfind("order=", 0) != 0)
    throw error("parse: malformed magma header");
  Kind kind = kind_from_name(kindtag.substr(5));
  int k = std::atoi(ordertag.c_str() + 6);
  if (k <= 0) throw error("parse: bad order");

  std::vector<Element> elems(k);
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < k; ++i) {
    std::string lab;
    if (!(is >> lab)) throw error("parse: truncated label row");
    elems[i] = Element{i, lab, lab.find('I') != std::string::npos};
    idx[lab] = i;
  }
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      std::string lab;
      if (!(is >> lab)) throw error("parse: truncated table");
      auto it = idx.find(lab);
      if (it == idx.end()) throw error("parse: unknown label '" + lab + "' in table");
      table[r * k + c] = static_cast<uint16_t>(it->second);
    }
  std::optional<int> zero;
  std::string trailer;
  if (is >> trailer) {
    if (trailer.rfind("zero=", 0) != 0) throw error("parse: unexpected trailer '" + trailer + "'");
    auto it = idx.find(trailer.substr(5));
    if (it == idx.end()) throw error("parse: unknown zero label");
    zero = it->second;
  }
  return Magma(name, kind, std::move(elems), std::move(table), zero);
}

std::string render_subset(const Magma& m, const IndexSet& s) {
  std::vector<std::string> labels;
  s.for_each([&](int i) { labels.push_back(m.label(i)); });
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out;
}

}  // namespace nalg
