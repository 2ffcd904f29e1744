#include "nalg/specparse.hpp"

#include <vector>

namespace nalg {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw error("parse error at position " + std::to_string(pos) + ": " + what + " in '" +
                std::string(text) + "'");
  }
  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
    if (pos == start) fail("expected a constructor name");
    return std::string(text.substr(start, pos - start));
  }
  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::atoi(std::string(text.substr(start, pos - start)).c_str());
  }
};

Magma parse_one(Cursor& c) {
  std::string name = c.ident();
  c.expect('(');
  if (name == "N") {
    Magma inner = parse_one(c);
    c.expect(')');
    return extend(inner).extended;
  }
  if (name == "Ln") {
    int n = c.number();
    c.expect(',');
    int m = c.number();
    c.expect(')');
    return build_loop_ln({n, m});
  }
  if (name == "Zn") {
    int t = c.number();
    c.expect(',');
    int u = c.number();
    c.expect(';');
    int n = c.number();
    c.expect(';');
    std::string fam = c.ident();
    c.expect(')');
    return build_groupoid_zn({n, t, u, groupoid_family_from_name(fam)});
  }
  int n = c.number();
  c.expect(')');
  if (name == "Sn") return build_classical(ClassicalKind::SymmetricGroup, n);
  if (name == "An") return build_classical(ClassicalKind::AlternatingGroup, n);
  if (name == "D2n") return build_classical(ClassicalKind::Dihedral2n, n);
  if (name == "Zadd") return build_classical(ClassicalKind::ZnAdd, n);
  if (name == "Zmul") return build_classical(ClassicalKind::ZnMulSemigroup, n);
  if (name == "Zmulx") return build_classical(ClassicalKind::ZnMulUnits, n);
  if (name == "Ssym") return build_classical(ClassicalKind::SymmetricSemigroup, n);
  if (name == "C") return build_classical(ClassicalKind::CyclicGroup, n);
  c.fail("unknown constructor '" + name + "'");
}

}  // namespace

Magma build_from_spec(std::string_view spec) {
  Cursor c{spec};
  Magma m = parse_one(c);
  c.skip_ws();
  if (c.pos != spec.size()) c.fail("trailing input");
  return m;
}

bool spec_is_multi(std::string_view spec) {
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) return true;
  }
  return false;
}

MultiStructure build_multi_from_spec(std::string_view spec) {
  std::vector<Magma> comps;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size()) {
      if (spec[i] == '(') ++depth;
      if (spec[i] == ')') --depth;
    }
    if (i == spec.size() || (spec[i] == '+' && depth == 0)) {
      comps.push_back(build_from_spec(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  return make_multi(std::string(spec), std::move(comps));
}

}  // namespace nalg
