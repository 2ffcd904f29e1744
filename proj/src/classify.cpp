#include "nalg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "nalg/constructors.hpp"

namespace nalg {

std::string_view lagrange_tag_name(LagrangeTag t) {
  switch (t) {
    case LagrangeTag::Lagrange: return "lagrange";
    case LagrangeTag::Weakly: return "weakly";
    case LagrangeTag::Free: return "free";
  }
  return "?";
}

std::string_view sylow_tag_name(SylowTag t) {
  switch (t) {
    case SylowTag::Sylow: return "sylow";
    case SylowTag::Weakly: return "weakly";
    case SylowTag::Free: return "free";
    case SylowTag::Super: return "super";
  }
  return "?";
}

std::string_view cauchy_tag_name(CauchyTag t) {
  switch (t) {
    case CauchyTag::Cauchy: return "cauchy";
    case CauchyTag::Semi: return "semi";
    case CauchyTag::Weakly: return "weakly";
    case CauchyTag::Free: return "free";
  }
  return "?";
}

LagrangeVerdict lagrange_verdict(const Magma& m, Flavor flavor) {
  LagrangeVerdict v;
  for (const auto& s : flavored_substructures(m, flavor)) {
    if (m.order() % s.count() == 0)
      v.witnesses.push_back(s);
    else
      v.counterexamples.push_back(s);
  }
  if (v.witnesses.empty())
    v.tag = LagrangeTag::Free;
  else if (v.counterexamples.empty())
    v.tag = LagrangeTag::Lagrange;
  else
    v.tag = LagrangeTag::Weakly;
  return v;
}

namespace {

std::vector<std::pair<long, int>> prime_powers_of(long n) {
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

bool is_power_of(long v, long p, int min_exp) {
  if (v < 1) return false;
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return v == 1 && e >= min_exp;
}

}  // namespace

SylowReport sylow_report(const Magma& m, Flavor flavor) {
  SylowReport rep;
  auto subs = flavored_substructures(m, flavor);
  for (auto [p, alpha] : prime_powers_of(m.order())) {
    SylowPrimeRecord rec;
    rec.p = p;
    rec.alpha = alpha;
    long exact = 1;
    for (int i = 0; i < alpha; ++i) exact *= p;
    for (const auto& s : subs) {
      if (s.count() == exact && !rec.found) rec.found = s;
      if (!rec.super && s.count() > exact && is_power_of(s.count(), p, alpha + 1)) rec.super = s;
    }
    rep.primes.push_back(std::move(rec));
  }
  int found = 0, super = 0;
  for (const auto& r : rep.primes) {
    if (r.found) ++found;
    if (r.super) ++super;
  }
  const int total = static_cast<int>(rep.primes.size());
  if (total == 0 || found == 0)
    rep.tag = SylowTag::Free;
  else if (found == total)
    rep.tag = super == total ? SylowTag::Super : SylowTag::Sylow;
  else
    rep.tag = SylowTag::Weakly;
  return rep;
}

bool sylow_2pk_exists(int n, long p, int k) {
  if (k < 1) throw error("bad-factorization: need k >= 1");
  long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  if ((n + 1) % pk != 0) throw error("bad-factorization: p^k does not divide n+1");
  long r = (n + 1) / pk;
  if (r % p == 0) throw error("bad-factorization: p^k is not the exact power in n+1");
  return (r - 1) % (pk - 1) == 0;
}

CauchyReport cauchy_report(const Magma& m) {
  CauchyReport rep;
  auto e = identity_of(m);
  auto target = neutro_target(m);
  bool any_pos = false, anti_e = false, anti_t = false, pos_e = false, pos_t = false;
  for (int x = 0; x < m.order(); ++x) {
    CauchyRecord rec;
    rec.element = x;
    if (e) {
      rec.exp_identity = order_to(m, x, *e);
      if (rec.exp_identity) rec.divides_identity = m.order() % *rec.exp_identity == 0;
    }
    if (target) {
      rec.exp_target = order_to(m, x, *target);
      if (rec.exp_target) rec.divides_target = m.order() % *rec.exp_target == 0;
    }
    bool trivial = (e && x == *e) || (target && x == *target);
    if (!trivial) {
      if (rec.exp_identity) (rec.divides_identity ? pos_e : anti_e) = true;
      if (rec.exp_target) (rec.divides_target ? pos_t : anti_t) = true;
    }
    rep.records.push_back(rec);
  }
  any_pos = pos_e || pos_t;
  if (!anti_e && !anti_t && any_pos)
    rep.tag = CauchyTag::Cauchy;
  else if ((!anti_e) != (!anti_t) && any_pos)
    rep.tag = CauchyTag::Semi;
  else if (any_pos)
    rep.tag = CauchyTag::Weakly;
  else
    rep.tag = CauchyTag::Free;
  return rep;
}

CanonicalSubloopFamily canonical_subloops(int n, int m, int t) {
  LoopFamilySpec spec{n, m};
  spec.validate();
  if (t < 1 || n % t != 0) throw error("t-not-divisor: " + std::to_string(t) + " does not divide n");
  CanonicalSubloopFamily fam;
  fam.n = n;
  fam.m = m;
  fam.t = t;
  NeutroMagma nm = extend_loop(build_loop_ln(spec));
  fam.extension = nm.extended;
  const Magma& ext = fam.extension;
  const int b = ext.base_order;  // n + 1; base indices: e=0, i=i
  const int k = n / t;

  for (int i = 1; i <= t; ++i) {
    IndexSet s(ext.order());
    s.add(0);      // e
    s.add(b);      // eI
    for (int r = 0; r < k; ++r) {
      int lab = i + r * t;
      s.add(lab);
      s.add(lab + b);
    }
    fam.members.push_back(s);
  }

  for (const auto& s : fam.members) {
    if (!is_closed(ext, s)) fam.closed = false;
    if (s.count() != 2 * (k + 1)) fam.orders_ok = false;
  }
  IndexSet expected_meet(ext.order());
  expected_meet.add(0);
  expected_meet.add(b);
  IndexSet cover(ext.order());
  for (size_t i = 0; i < fam.members.size(); ++i) {
    cover = cover | fam.members[i];
    for (size_t j = i + 1; j < fam.members.size(); ++j)
      if ((fam.members[i] & fam.members[j]) != expected_meet) fam.intersections_ok = false;
  }
  if (cover != IndexSet::full(ext.order())) fam.covers = false;

  // the natural map e->e, i + rt -> j + rt (flags preserved) must be an
  // isomorphism between any two members
  for (size_t i = 0; i + 1 < fam.members.size() && fam.isomorphic; ++i) {
    size_t j = i + 1;
    std::vector<int> map(ext.order(), -1);
    map[0] = 0;
    map[b] = b;
    for (int r = 0; r < k; ++r) {
      int from = static_cast<int>(i) + 1 + r * t, to = static_cast<int>(j) + 1 + r * t;
      map[from] = to;
      map[from + b] = to + b;
    }
    fam.members[i].for_each([&](int x) {
      fam.members[i].for_each([&](int y) {
        if (map[ext.at(x, y)] != ext.at(map[x], map[y])) fam.isomorphic = false;
      });
    });
  }
  return fam;
}

OrderCharacterization subloop_order_characterization(int n, int m) {
  LoopFamilySpec spec{n, m};
  spec.validate();
  OrderCharacterization oc;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) oc.divisors.insert(d);
  NeutroMagma nm = extend_loop(build_loop_ln(spec));
  const Magma& ext = nm.extended;
  for (const auto& s : flavored_substructures(ext, Flavor::Neutrosophic)) {
    int c = s.count();
    if (c % 2 == 0 && c >= 4) oc.ks.insert(c / 2 - 1);
  }
  oc.ks.insert(n);  // the whole extension, order 2(n+1)
  oc.match = oc.ks == oc.divisors;
  return oc;
}

ConjugacyResult conjugate_substructures(const Magma& m, const IndexSet& h, const IndexSet& k) {
  if (!is_closed(m, h) || !is_closed(m, k))
    throw error("not-closed: conjugacy asked of non-closed subsets");
  ConjugacyResult res;
  if (m.kind() == Kind::Groupoid) {
    // H = xK or Kx for some x in H
    std::vector<int> hv = h.to_vector();
    for (int x : hv) {
      if (left_translate(m, x, k) == h || right_translate(m, k, x) == h) {
        res.conjugate = true;
        res.x = x;
        return res;
      }
    }
    return res;
  }
  for (int x = 0; x < m.order(); ++x) {
    IndexSet xh = left_translate(m, x, h);
    for (int y = 0; y < m.order(); ++y) {
      if (xh == right_translate(m, k, y)) {
        res.conjugate = true;
        res.x = x;
        res.y = y;
        return res;
      }
    }
  }
  return res;
}

NormalizerResult normalizer_of(const Magma& m, int a) {
  if (a < 0 || a >= m.order()) throw std::out_of_range("normalizer: element foreign to magma");
  NormalizerResult r{IndexSet(m.order()), false};
  for (int x = 0; x < m.order(); ++x)
    if (m.at(x, a) == m.at(a, x)) r.members.add(x);
  r.closed = is_closed(m, r.members);
  return r;
}

std::string render_classification(const Magma& m, Flavor flavor) {
  std::ostringstream os;
  LagrangeVerdict lag = lagrange_verdict(m, flavor);
  SylowReport syl = sylow_report(m, flavor);
  CauchyReport cau = cauchy_report(m);
  os << "LAGRANGE=" << lagrange_tag_name(lag.tag) << "\n";
  for (const auto& rec : syl.primes)
    os << "SYLOW p=" << rec.p << " alpha=" << rec.alpha << " found=" << (rec.found ? "yes" : "no")
       << "\n";
  os << "SYLOW_TAG=" << sylow_tag_name(syl.tag) << "\n";
  os << "CAUCHY=" << cauchy_tag_name(cau.tag) << "\n";
  for (const auto& w : lag.witnesses) os << "witness " << render_subset(m, w) << "\n";
  for (const auto& c : lag.counterexamples) os << "counterexample " << render_subset(m, c) << "\n";
  for (const auto& rec : syl.primes) {
    if (rec.found) os << "sylow-witness p=" << rec.p << " " << render_subset(m, *rec.found) << "\n";
    if (rec.super) os << "sylow-super p=" << rec.p << " " << render_subset(m, *rec.super) << "\n";
  }
  return os.str();
}

}  // namespace nalg
