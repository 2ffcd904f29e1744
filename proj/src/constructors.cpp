#include "nalg/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace nalg {

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int a = 0;
      while (n % p == 0) {
        n /= p;
        ++a;
      }
      f.emplace_back(p, a);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

void LoopFamilySpec::validate() const {
  if (n <= 3) throw error("inadmissible-spec: n must exceed 3 (got n=" + std::to_string(n) + ")");
  if (n % 2 == 0) throw error("inadmissible-spec: n must be odd (got n=" + std::to_string(n) + ")");
  if (m <= 1 || m >= n)
    throw error("inadmissible-spec: need 1 < m < n (got m=" + std::to_string(m) + ")");
  if (gcd_l(m, n) != 1)
    throw error("inadmissible-spec: gcd(m, n) != 1 for m=" + std::to_string(m) +
                ", n=" + std::to_string(n));
  if (gcd_l(m - 1, n) != 1)
    throw error("inadmissible-spec: gcd(m-1, n) != 1 for m=" + std::to_string(m) +
                ", n=" + std::to_string(n));
}

Magma build_loop_ln(const LoopFamilySpec& spec) {
  spec.validate();
  const int n = spec.n, m = spec.m;
  const int k = n + 1;  // e, 1..n
  std::vector<Element> elems(k);
  elems[0] = Element{0, "e", false};
  for (int i = 1; i <= n; ++i) elems[i] = Element{i, std::to_string(i), false};

  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  auto prod = [&](int i, int j) -> int {  // 1-based loop labels
    if (i == 0) return j;
    if (j == 0) return i;
    if (i == j) return 0;
    long t = (static_cast<long>(m) * j - static_cast<long>(m - 1) * i) % n;
    if (t < 0) t += n;
    return t == 0 ? n : static_cast<int>(t);  // residue 0 carries the label n
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = static_cast<uint16_t>(prod(i, j));

  Magma loop("Ln(" + std::to_string(n) + "," + std::to_string(m) + ")", Kind::Loop,
             std::move(elems), std::move(table));
  loop.family = Family::LnLoop;
  loop.fam_n = n;
  loop.fam_m = m;
  return loop;
}

std::vector<int> enumerate_ln(int n) {
  if (n <= 3 || n % 2 == 0) throw error("invalid-n: need odd n > 3");
  std::vector<int> ms;
  for (int m = 2; m < n; ++m)
    if (gcd_l(m, n) == 1 && gcd_l(m - 1, n) == 1) ms.push_back(m);
  return ms;
}

long count_ln(int n) {
  if (n <= 3 || n % 2 == 0) throw error("invalid-n: need odd n > 3");
  long c = 1;
  for (auto [p, a] : factorize(n)) {
    long pw = 1;
    for (int i = 1; i < a; ++i) pw *= p;
    c *= (p - 2) * pw;
  }
  return c;
}

namespace {

long count_coprime_triple_excluded(int n, int off1, int off2) {
  // number of m in (1, n) with gcd(m,n)=1, gcd(m-1,n)=1 and the extra
  // congruence class m = off* excluded per prime; closed form
  // prod (p - 3) p^(a-1), valid when every p >= 5
  (void)off1;
  (void)off2;
  long c = 1;
  for (auto [p, a] : factorize(n)) {
    long pw = 1;
    for (int i = 1; i < a; ++i) pw *= p;
    c *= (p - 3) * pw;
  }
  return c;
}

}  // namespace

long count_strictly_noncommutative(int n) {
  if (n <= 3 || n % 2 == 0) throw error("invalid-n: need odd n > 3");
  return count_coprime_triple_excluded(n, 0, 0);
}

long count_strictly_nonalternative(int n) {
  if (n <= 3 || n % 2 == 0) throw error("invalid-n: need odd n > 3");
  return count_coprime_triple_excluded(n, 0, 0);
}

bool is_strictly_noncommutative(const Magma& m) {
  auto e = identity_of(m);
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y) {
      if (x == y || (e && (x == *e || y == *e))) continue;
      if (m.at(x, y) == m.at(y, x)) return false;
    }
  return true;
}

bool is_strictly_nonalternative(const Magma& m, Side side) {
  auto e = identity_of(m);
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y) {
      if (x == y || (e && (x == *e || y == *e))) continue;
      bool holds = side == Side::Right ? m.at(m.at(x, y), y) == m.at(x, m.at(y, y))
                                       : m.at(m.at(x, x), y) == m.at(x, m.at(x, y));
      if (holds) return false;
    }
  return true;
}

std::string_view groupoid_family_name(GroupoidFamily f) {
  switch (f) {
    case GroupoidFamily::Z: return "Z";
    case GroupoidFamily::Zstar: return "Zstar";
    case GroupoidFamily::Zstarstar: return "Zstarstar";
    case GroupoidFamily::Zfull: return "Zfull";
  }
  return "Z";
}

GroupoidFamily groupoid_family_from_name(std::string_view s) {
  if (s == "Z") return GroupoidFamily::Z;
  if (s == "Zstar") return GroupoidFamily::Zstar;
  if (s == "Zstarstar") return GroupoidFamily::Zstarstar;
  if (s == "Zfull") return GroupoidFamily::Zfull;
  throw error("unknown groupoid family: " + std::string(s));
}

void GroupoidFamilySpec::validate() const {
  if (n < 3) throw error("family-constraint-violation: need n >= 3");
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  if (!in_range(t) || !in_range(u))
    throw error("family-constraint-violation: t, u must be residues mod n");
  switch (family) {
    case GroupoidFamily::Z:
      if (t == 0 || u == 0) throw error("family-constraint-violation: Z(n) needs t, u nonzero");
      if (t == u) throw error("family-constraint-violation: Z(n) needs t != u");
      if (gcd_l(t, u) != 1) throw error("family-constraint-violation: Z(n) needs gcd(t, u) = 1");
      break;
    case GroupoidFamily::Zstar:
      if (t == 0 || u == 0) throw error("family-constraint-violation: Z*(n) needs t, u nonzero");
      if (t == u) throw error("family-constraint-violation: Z*(n) needs t != u");
      break;
    case GroupoidFamily::Zstarstar:
      if (t == 0 || u == 0) throw error("family-constraint-violation: Z**(n) needs t, u nonzero");
      break;
    case GroupoidFamily::Zfull:
      break;
  }
}

Magma build_groupoid_zn(const GroupoidFamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<Element> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = Element{i, std::to_string(i), false};
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] =
          static_cast<uint16_t>((static_cast<long>(spec.t) * a + static_cast<long>(spec.u) * b) % n);
  Magma g("Zn(" + std::to_string(spec.t) + "," + std::to_string(spec.u) + ";" + std::to_string(n) +
              ";" + std::string(groupoid_family_name(spec.family)) + ")",
          Kind::Groupoid, std::move(elems), std::move(table), 0);
  g.family = Family::ZnGroupoid;
  g.fam_n = n;
  g.fam_t = spec.t;
  g.fam_u = spec.u;
  return g;
}

std::vector<std::pair<int, int>> enumerate_groupoid_family(int n, GroupoidFamily family) {
  if (n < 3) throw error("invalid-n: need n >= 3");
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) {
      GroupoidFamilySpec s{n, t, u, family};
      try {
        s.validate();
      } catch (const error&) {
        continue;
      }
      out.emplace_back(t, u);
    }
  return out;
}

long count_groupoid_family(int n, GroupoidFamily family) {
  if (n < 3) throw error("invalid-n: need n >= 3");
  if (family == GroupoidFamily::Zstar) return static_cast<long>(n - 1) * (n - 2);
  return static_cast<long>(enumerate_groupoid_family(n, family).size());
}

namespace {

Magma build_cyclic(int n, bool power_labels) {
  std::vector<Element> elems(n);
  for (int i = 0; i < n; ++i) {
    std::string lab;
    if (!power_labels)
      lab = std::to_string(i);
    else
      lab = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
    elems[i] = Element{i, lab, false};
  }
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = static_cast<uint16_t>((a + b) % n);
  Magma g(power_labels ? "C(" + std::to_string(n) + ")" : "Zadd(" + std::to_string(n) + ")",
          Kind::Group, std::move(elems), std::move(table));
  g.family = power_labels ? Family::Cyclic : Family::ZnAdd;
  g.fam_n = n;
  return g;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool perm_is_even(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

std::string map_label(const std::vector<int>& p) {
  std::string s;
  for (int v : p) s += std::to_string(v + 1);
  return s;
}

// maps composed left to right: (f.g)(x) = g(f(x))
Magma build_map_magma(const std::vector<std::vector<int>>& maps, std::string name, Kind kind) {
  const int k = static_cast<int>(maps.size());
  std::vector<Element> elems(k);
  for (int i = 0; i < k; ++i) elems[i] = Element{i, map_label(maps[i]), false};
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  const int n = static_cast<int>(maps[0].size());
  std::vector<int> comp(n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = maps[b][maps[a][x]];
      int idx = -1;
      for (int c = 0; c < k; ++c)
        if (maps[c] == comp) {
          idx = c;
          break;
        }
      table[a * k + b] = static_cast<uint16_t>(idx);
    }
  return Magma(std::move(name), kind, std::move(elems), std::move(table));
}

Magma build_symmetric_semigroup(int n) {
  if (n > 4) throw error("cap-exceeded: symmetric semigroup capped at n <= 4");
  long k = 1;
  for (int i = 0; i < n; ++i) k *= n;
  std::vector<std::vector<int>> maps;
  maps.reserve(k);
  std::vector<int> f(n, 0);
  while (true) {
    maps.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return build_map_magma(maps, "Ssym(" + std::to_string(n) + ")", Kind::Semigroup);
}

Magma build_dihedral(int n) {
  // order 2n, elements a^i b^j with a^2 = b^n = 1 and bab = a
  const int k = 2 * n;
  std::vector<Element> elems(k);
  auto idx = [&](int i, int j) { return i * n + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      std::string lab = i ? "a" : "";
      if (j == 1)
        lab += "b";
      else if (j > 1)
        lab += "b" + std::to_string(j);
      if (lab.empty()) lab = "e";
      elems[idx(i, j)] = Element{idx(i, j), lab, false};
    }
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          // (a^i1 b^j1)(a^i2 b^j2) = a^(i1+i2) b^(j2 +/- j1)
          int i = (i1 + i2) % 2;
          int j = i2 ? (j2 - j1 % n + n) % n : (j1 + j2) % n;
          table[idx(i1, j1) * k + idx(i2, j2)] = static_cast<uint16_t>(idx(i, j));
        }
  return Magma("D2n(" + std::to_string(n) + ")", Kind::Group, std::move(elems), std::move(table));
}

}  // namespace

Magma build_classical(ClassicalKind kind, int n) {
  if (n < 1) throw error("invalid-n: need n >= 1");
  switch (kind) {
    case ClassicalKind::CyclicGroup:
      return build_cyclic(n, true);
    case ClassicalKind::ZnAdd:
      return build_cyclic(n, false);
    case ClassicalKind::ZnMulSemigroup: {
      std::vector<Element> elems(n);
      for (int i = 0; i < n; ++i) elems[i] = Element{i, std::to_string(i), false};
      std::vector<uint16_t> table(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          table[a * n + b] = static_cast<uint16_t>((static_cast<long>(a) * b) % n);
      Magma g("Zmul(" + std::to_string(n) + ")", n > 1 ? Kind::Monoid : Kind::Semigroup,
              std::move(elems), std::move(table), n > 1 ? std::optional<int>(0) : std::nullopt);
      g.family = Family::ZnMul;
      g.fam_n = n;
      return g;
    }
    case ClassicalKind::ZnMulUnits: {
      if (n < 2) throw error("invalid-n: units need n >= 2");
      std::vector<int> us;
      for (int a = 1; a < n; ++a)
        if (gcd_l(a, n) == 1) us.push_back(a);
      const int k = static_cast<int>(us.size());
      std::vector<Element> elems(k);
      for (int i = 0; i < k; ++i) elems[i] = Element{i, std::to_string(us[i]), false};
      std::vector<uint16_t> table(static_cast<size_t>(k) * k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          int v = static_cast<int>((static_cast<long>(us[a]) * us[b]) % n);
          int idx = static_cast<int>(std::find(us.begin(), us.end(), v) - us.begin());
          table[a * k + b] = static_cast<uint16_t>(idx);
        }
      Magma g("Zmulx(" + std::to_string(n) + ")", Kind::Group, std::move(elems), std::move(table));
      g.family = Family::ZnMul;
      g.fam_n = n;
      return g;
    }
    case ClassicalKind::SymmetricGroup: {
      if (n > 5) throw error("cap-exceeded: symmetric group capped at n <= 5");
      return build_map_magma(permutations_of(n), "Sn(" + std::to_string(n) + ")", Kind::Group);
    }
    case ClassicalKind::AlternatingGroup: {
      if (n > 5) throw error("cap-exceeded: alternating group capped at n <= 5");
      std::vector<std::vector<int>> evens;
      for (auto& p : permutations_of(n))
        if (perm_is_even(p)) evens.push_back(p);
      return build_map_magma(evens, "An(" + std::to_string(n) + ")", Kind::Group);
    }
    case ClassicalKind::Dihedral2n:
      if (n < 2) throw error("invalid-n: dihedral needs n >= 2");
      return build_dihedral(n);
    case ClassicalKind::SymmetricSemigroup:
      return build_symmetric_semigroup(n);
  }
  throw error("unknown classical kind");
}

}  // namespace nalg
