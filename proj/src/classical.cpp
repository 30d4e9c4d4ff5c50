#include "bpdl/classical.hpp"

#include <ostream>

namespace bpdl {

namespace {

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
}

std::shared_ptr<const detail::CFormulaNode> finish(detail::CFormulaNode n) {
  std::size_t h = mix(0xC1A5u, static_cast<std::size_t>(n.kind));
  if (n.kind == CKind::Atom) {
    h = mix(h, std::hash<std::string>{}(n.name));
    h = mix(h, static_cast<std::size_t>(n.polarity));
  }
  if (!n.a.empty()) h = mix(h, n.a.hash());
  if (!n.b.empty()) h = mix(h, n.b.hash());
  if (!n.prog.empty()) h = mix(h, n.prog.hash());
  n.hash = h;
  n.size = 1 + (n.a.empty() ? 0 : n.a.size()) + (n.b.empty() ? 0 : n.b.size());
  return std::make_shared<const detail::CFormulaNode>(std::move(n));
}

std::shared_ptr<const detail::CProgramNode> finish(detail::CProgramNode n) {
  std::size_t h = mix(0xC2A6u, static_cast<std::size_t>(n.kind));
  if (!n.name.empty()) h = mix(h, std::hash<std::string>{}(n.name));
  if (!n.a.empty()) h = mix(h, n.a.hash());
  if (!n.b.empty()) h = mix(h, n.b.hash());
  if (!n.test.empty()) h = mix(h, n.test.hash());
  n.hash = h;
  return std::make_shared<const detail::CProgramNode>(std::move(n));
}

}  // namespace

ClassicalFormula ClassicalFormula::atom(std::string name, Sign polarity) {
  detail::CFormulaNode n{CKind::Atom, std::move(name), polarity, {}, {}, {}};
  return ClassicalFormula(finish(std::move(n)));
}
ClassicalFormula ClassicalFormula::falsum() {
  static const ClassicalFormula f(finish({CKind::Falsum, {}, Sign::Plus, {}, {}, {}}));
  return f;
}
ClassicalFormula ClassicalFormula::verum() {
  static const ClassicalFormula f(finish({CKind::Verum, {}, Sign::Plus, {}, {}, {}}));
  return f;
}
ClassicalFormula ClassicalFormula::conj(ClassicalFormula l, ClassicalFormula r) {
  return ClassicalFormula(finish({CKind::And, {}, Sign::Plus, std::move(l), std::move(r), {}}));
}
ClassicalFormula ClassicalFormula::disj(ClassicalFormula l, ClassicalFormula r) {
  return ClassicalFormula(finish({CKind::Or, {}, Sign::Plus, std::move(l), std::move(r), {}}));
}
ClassicalFormula ClassicalFormula::implies(ClassicalFormula l, ClassicalFormula r) {
  return ClassicalFormula(
      finish({CKind::Implies, {}, Sign::Plus, std::move(l), std::move(r), {}}));
}
ClassicalFormula ClassicalFormula::box(ClassicalProgram p, ClassicalFormula f) {
  return ClassicalFormula(finish({CKind::Box, {}, Sign::Plus, std::move(f), {}, std::move(p)}));
}
ClassicalFormula ClassicalFormula::diamond(ClassicalProgram p, ClassicalFormula f) {
  return ClassicalFormula(
      finish({CKind::Diamond, {}, Sign::Plus, std::move(f), {}, std::move(p)}));
}

bool operator==(const ClassicalFormula& x, const ClassicalFormula& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind) return false;
  switch (a.kind) {
    case CKind::Atom:
      return a.name == b.name && a.polarity == b.polarity;
    case CKind::Falsum:
    case CKind::Verum:
      return true;
    case CKind::And:
    case CKind::Or:
    case CKind::Implies:
      return a.a == b.a && a.b == b.b;
    case CKind::Box:
    case CKind::Diamond:
      return a.prog == b.prog && a.a == b.a;
  }
  return false;
}

ClassicalProgram ClassicalProgram::atomic(std::string name) {
  return ClassicalProgram(finish({CProgKind::Atomic, std::move(name), {}, {}, {}}));
}
ClassicalProgram ClassicalProgram::seq(ClassicalProgram l, ClassicalProgram r) {
  return ClassicalProgram(finish({CProgKind::Seq, {}, std::move(l), std::move(r), {}}));
}
ClassicalProgram ClassicalProgram::choice(ClassicalProgram l, ClassicalProgram r) {
  return ClassicalProgram(finish({CProgKind::Choice, {}, std::move(l), std::move(r), {}}));
}
ClassicalProgram ClassicalProgram::star(ClassicalProgram p) {
  return ClassicalProgram(finish({CProgKind::Star, {}, std::move(p), {}, {}}));
}
ClassicalProgram ClassicalProgram::test(ClassicalFormula f) {
  return ClassicalProgram(finish({CProgKind::Test, {}, {}, {}, std::move(f)}));
}

bool operator==(const ClassicalProgram& x, const ClassicalProgram& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind) return false;
  switch (a.kind) {
    case CProgKind::Atomic:
      return a.name == b.name;
    case CProgKind::Seq:
    case CProgKind::Choice:
      return a.a == b.a && a.b == b.b;
    case CProgKind::Star:
      return a.a == b.a;
    case CProgKind::Test:
      return a.test == b.test;
  }
  return false;
}

namespace {

// Same layout and precedence as the source-language printer.
void print(std::string& out, const ClassicalFormula& f, int ctx);
void print(std::string& out, const ClassicalProgram& p, int ctx);

int level_of(const ClassicalFormula& f) {
  switch (f.kind()) {
    case CKind::Implies: return 1;
    case CKind::Or: return 2;
    case CKind::And: return 3;
    default: return 4;
  }
}

void print(std::string& out, const ClassicalFormula& f, int ctx) {
  const bool paren = level_of(f) < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case CKind::Atom:
      out += f.name();
      out += f.polarity() == Sign::Plus ? '+' : '-';
      break;
    case CKind::Falsum: out += 'F'; break;
    case CKind::Verum: out += 'T'; break;
    case CKind::And:
      print(out, f.lhs(), 3);
      out += " & ";
      print(out, f.rhs(), 4);
      break;
    case CKind::Or:
      print(out, f.lhs(), 2);
      out += " | ";
      print(out, f.rhs(), 3);
      break;
    case CKind::Implies:
      print(out, f.lhs(), 2);
      out += " -> ";
      print(out, f.rhs(), 1);
      break;
    case CKind::Box:
    case CKind::Diamond:
      out += f.kind() == CKind::Box ? '[' : '<';
      print(out, f.program(), 1);
      out += f.kind() == CKind::Box ? ']' : '>';
      print(out, f.operand(), 4);
      break;
  }
  if (paren) out += ')';
}

int level_of(const ClassicalProgram& p) {
  switch (p.kind()) {
    case CProgKind::Choice: return 1;
    case CProgKind::Seq: return 2;
    default: return 3;
  }
}

void print(std::string& out, const ClassicalProgram& p, int ctx) {
  const bool paren = level_of(p) < ctx;
  if (paren) out += '(';
  switch (p.kind()) {
    case CProgKind::Atomic: out += p.name(); break;
    case CProgKind::Seq:
      print(out, p.lhs(), 2);
      out += ';';
      print(out, p.rhs(), 3);
      break;
    case CProgKind::Choice:
      print(out, p.lhs(), 1);
      out += '+';
      print(out, p.rhs(), 2);
      break;
    case CProgKind::Star:
      print(out, p.operand(), 3);
      out += '*';
      break;
    case CProgKind::Test:
      out += '(';
      print(out, p.formula(), 1);
      out += ")?";
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const ClassicalFormula& f) {
  std::string s;
  print(s, f, 1);
  return s;
}

std::string to_string(const ClassicalProgram& p) {
  std::string s;
  print(s, p, 1);
  return s;
}

std::ostream& operator<<(std::ostream& os, const ClassicalFormula& f) { return os << to_string(f); }

}  // namespace bpdl
