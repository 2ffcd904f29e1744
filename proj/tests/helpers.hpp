#pragma once

#include <string>
#include <vector>

#include "nalg/magma.hpp"
#include "nalg/neutro.hpp"

namespace testutil {

// deterministic generator for the property tests
struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint32_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<uint32_t>(state >> 33);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint32_t>(n)); }
};

// the full Z_n[I] grid under the given operation; independent oracle for
// the paper's literal element sets that are not reachable by closure
inline nalg::Magma full_mod_grid(int n, nalg::ModOp op) {
  using nalg::NeutroScalar;
  std::vector<NeutroScalar> scalars;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) scalars.emplace_back(a, b, n);
  const int k = static_cast<int>(scalars.size());
  std::vector<nalg::Element> elems(k);
  for (int i = 0; i < k; ++i)
    elems[i] = nalg::Element{i, scalars[i].label(), scalars[i].is_neutro()};
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  auto index_of = [&](const NeutroScalar& s) {
    return s.a * n + s.b;
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      NeutroScalar p = op == nalg::ModOp::Add ? scalars[i].add(scalars[j])
                                              : scalars[i].mul(scalars[j]);
      table[i * k + j] = static_cast<uint16_t>(index_of(p));
    }
  std::optional<int> zero;
  if (op == nalg::ModOp::Mul) zero = 0;
  nalg::Magma m("grid" + std::to_string(n), nalg::Kind::Groupoid, std::move(elems),
                std::move(table), zero);
  return m;
}

// submagma induced on a closed subset, labels kept
inline nalg::Magma induced(const nalg::Magma& m, const nalg::IndexSet& s) {
  std::vector<int> v = s.to_vector();
  const int k = static_cast<int>(v.size());
  std::vector<nalg::Element> elems(k);
  std::vector<int> back(m.order(), -1);
  for (int i = 0; i < k; ++i) {
    back[v[i]] = i;
    elems[i] = nalg::Element{i, m.label(v[i]), m.element(v[i]).neutro};
  }
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = back[m.at(v[i], v[j])];
      if (p < 0) throw nalg::error("induced: subset not closed");
      table[i * k + j] = static_cast<uint16_t>(p);
    }
  return nalg::Magma(m.name() + ".sub", nalg::Kind::Groupoid, std::move(elems), std::move(table));
}

// relabel a magma through a random permutation; isomorphism fixture
inline nalg::Magma shuffled(const nalg::Magma& m, Lcg& rng) {
  const int k = m.order();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int i = k - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<nalg::Element> elems(k);
  for (int i = 0; i < k; ++i)
    elems[perm[i]] = nalg::Element{perm[i], m.label(i), m.element(i).neutro};
  std::vector<uint16_t> table(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[perm[a] * k + perm[b]] = static_cast<uint16_t>(perm[m.at(a, b)]);
  return nalg::Magma(m.name() + ".shuffled", nalg::Kind::Groupoid, std::move(elems),
                     std::move(table));
}

inline nalg::IndexSet subset_of(const nalg::Magma& m, std::initializer_list<const char*> labels) {
  nalg::IndexSet s(m.order());
  for (const char* lab : labels) {
    auto idx = m.index_of(lab);
    if (!idx) throw nalg::error("no element labeled " + std::string(lab) + " in " + m.name());
    s.add(*idx);
  }
  return s;
}

}  // namespace testutil
