#include "bpdl/syntax.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <unordered_set>

namespace bpdl {

namespace {

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
}

std::size_t formula_hash(const detail::FormulaNode& n) noexcept {
  std::size_t h = mix(0xF0F0u, static_cast<std::size_t>(n.kind));
  if (!n.name.empty()) h = mix(h, std::hash<std::string>{}(n.name));
  if (!n.a.empty()) h = mix(h, n.a.hash());
  if (!n.b.empty()) h = mix(h, n.b.hash());
  if (!n.prog.empty()) h = mix(h, n.prog.hash());
  return h;
}

std::size_t program_hash(const detail::ProgramNode& n) noexcept {
  std::size_t h = mix(0x0F0Fu, static_cast<std::size_t>(n.kind));
  if (!n.name.empty()) h = mix(h, std::hash<std::string>{}(n.name));
  if (!n.a.empty()) h = mix(h, n.a.hash());
  if (!n.b.empty()) h = mix(h, n.b.hash());
  if (!n.test.empty()) h = mix(h, n.test.hash());
  return h;
}

std::shared_ptr<const detail::FormulaNode> finish(detail::FormulaNode n) {
  n.hash = formula_hash(n);
  n.size = 1 + (n.a.empty() ? 0 : n.a.size()) + (n.b.empty() ? 0 : n.b.size()) +
           (n.prog.empty() ? 0 : n.prog.size());
  return std::make_shared<const detail::FormulaNode>(std::move(n));
}

std::shared_ptr<const detail::ProgramNode> finish(detail::ProgramNode n) {
  n.hash = program_hash(n);
  n.size = 1 + (n.a.empty() ? 0 : n.a.size()) + (n.b.empty() ? 0 : n.b.size()) +
           (n.test.empty() ? 0 : n.test.size());
  return std::make_shared<const detail::ProgramNode>(std::move(n));
}

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(finish(detail::FormulaNode{FormulaKind::Atom, std::move(name), {}, {}, {}}));
}
Formula Formula::bottom() {
  static const Formula b(finish(detail::FormulaNode{FormulaKind::Bottom, {}, {}, {}, {}}));
  return b;
}
Formula Formula::strong_neg(Formula f) {
  return Formula(finish(detail::FormulaNode{FormulaKind::StrongNeg, {}, std::move(f), {}, {}}));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(finish(detail::FormulaNode{FormulaKind::And, {}, std::move(l), std::move(r), {}}));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(finish(detail::FormulaNode{FormulaKind::Or, {}, std::move(l), std::move(r), {}}));
}
Formula Formula::implies(Formula l, Formula r) {
  return Formula(
      finish(detail::FormulaNode{FormulaKind::Implies, {}, std::move(l), std::move(r), {}}));
}
Formula Formula::box(Program p, Formula f) {
  return Formula(finish(detail::FormulaNode{FormulaKind::Box, {}, std::move(f), {}, std::move(p)}));
}
Formula Formula::diamond(Program p, Formula f) {
  return Formula(
      finish(detail::FormulaNode{FormulaKind::Diamond, {}, std::move(f), {}, std::move(p)}));
}
Formula Formula::neg(Formula f) { return implies(std::move(f), bottom()); }
Formula Formula::top() { return neg(bottom()); }
Formula Formula::iff(Formula l, Formula r) { return conj(implies(l, r), implies(r, l)); }

bool operator==(const Formula& x, const Formula& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (a.kind) {
    case FormulaKind::Atom:
      return a.name == b.name;
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::StrongNeg:
      return a.a == b.a;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return a.a == b.a && a.b == b.b;
    case FormulaKind::Box:
    case FormulaKind::Diamond:
      return a.prog == b.prog && a.a == b.a;
  }
  return false;
}

Program Program::atomic(std::string name) {
  return Program(finish(detail::ProgramNode{ProgramKind::Atomic, std::move(name), {}, {}, {}}));
}
Program Program::seq(Program l, Program r) {
  return Program(finish(detail::ProgramNode{ProgramKind::Seq, {}, std::move(l), std::move(r), {}}));
}
Program Program::choice(Program l, Program r) {
  return Program(
      finish(detail::ProgramNode{ProgramKind::Choice, {}, std::move(l), std::move(r), {}}));
}
Program Program::star(Program p) {
  return Program(finish(detail::ProgramNode{ProgramKind::Star, {}, std::move(p), {}, {}}));
}
Program Program::test(Formula f) {
  return Program(finish(detail::ProgramNode{ProgramKind::Test, {}, {}, {}, std::move(f)}));
}

bool operator==(const Program& x, const Program& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (a.kind) {
    case ProgramKind::Atomic:
      return a.name == b.name;
    case ProgramKind::Seq:
    case ProgramKind::Choice:
      return a.a == b.a && a.b == b.b;
    case ProgramKind::Star:
      return a.a == b.a;
    case ProgramKind::Test:
      return a.test == b.test;
  }
  return false;
}

// Lexer ------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, False, True, SNeg, CNeg, And, Or, Imp, Iff,
  LBrack, RBrack, LAngle, RAngle, LParen, RParen, Semi, Plus, Star, Quest, End
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::False: return "'F'";
    case Tok::True: return "'T'";
    case Tok::SNeg: return "'~'";
    case Tok::CNeg: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Quest: return "'?'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  SourceSpan span;
  std::string text;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, {i, i + len}, std::string(s.substr(i, len))});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    // F and T are reserved constants; any other uppercase start is an error.
    if ((c == 'F' || c == 'T') && (i + 1 >= s.size() || !ident_char(s[i + 1]))) {
      push(c == 'F' ? Tok::False : Tok::True, 1);
      continue;
    }
    switch (c) {
      case '~': push(Tok::SNeg, 1); continue;
      case '!': push(Tok::CNeg, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      case '[': push(Tok::LBrack, 1); continue;
      case ']': push(Tok::RBrack, 1); continue;
      case '>': push(Tok::RAngle, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case ';': push(Tok::Semi, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '?': push(Tok::Quest, 1); continue;
      case '-':
        if (s.substr(i, 2) == "->") {
          push(Tok::Imp, 2);
          continue;
        }
        break;
      case '<':
        if (s.substr(i, 3) == "<->") push(Tok::Iff, 3);
        else push(Tok::LAngle, 1);
        continue;
      default:
        break;
    }
    std::size_t j = i + 1;
    while (j < s.size() && ident_char(s[j])) ++j;
    throw ParseError({i, j}, "a token", std::string(s.substr(i, j - i)));
  }
  out.push_back({Tok::End, {s.size(), s.size()}, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }
  Program whole_program() {
    Program p = program();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what);
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.span, what, t.kind == Tok::End ? describe(Tok::End) : "'" + t.text + "'");
  }

  Formula formula() {
    Formula f = implication();
    while (accept(Tok::Iff)) f = Formula::iff(f, implication());
    return f;
  }
  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Imp)) return Formula::implies(f, implication());
    return f;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(f, conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conj(f, unary());
    return f;
  }
  Formula unary() {
    switch (peek().kind) {
      case Tok::SNeg:
        ++pos_;
        return Formula::strong_neg(unary());
      case Tok::CNeg:
        ++pos_;
        return Formula::neg(unary());
      case Tok::LBrack: {
        ++pos_;
        Program p = program();
        expect(Tok::RBrack, "']'");
        return Formula::box(std::move(p), unary());
      }
      case Tok::LAngle: {
        ++pos_;
        Program p = program();
        expect(Tok::RAngle, "'>'");
        return Formula::diamond(std::move(p), unary());
      }
      default:
        return primary();
    }
  }
  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return Formula::atom(t.text);
      case Tok::False:
        ++pos_;
        return Formula::bottom();
      case Tok::True:
        ++pos_;
        return Formula::top();
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        fail("formula");
    }
  }

  Program program() {
    Program p = sequence();
    while (accept(Tok::Plus)) p = Program::choice(p, sequence());
    return p;
  }
  Program sequence() {
    Program p = starred();
    while (accept(Tok::Semi)) p = Program::seq(p, starred());
    return p;
  }
  Program starred() {
    Program p = program_primary();
    while (accept(Tok::Star)) p = Program::star(p);
    return p;
  }
  Program program_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      ++pos_;
      return Program::atomic(t.text);
    }
    if (t.kind != Tok::LParen) fail("program");
    // "(" starts either a parenthesised program or a test "(φ)?". Try the
    // program reading first; fall back to the formula reading.
    const std::size_t save = pos_;
    ++pos_;
    std::optional<ParseError> program_error;
    try {
      Program p = program();
      if (peek().kind == Tok::RParen && peek(1).kind != Tok::Quest) {
        ++pos_;
        return p;
      }
    } catch (const ParseError& e) {
      program_error = e;
    }
    pos_ = save + 1;
    try {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      expect(Tok::Quest, "'?'");
      return Program::test(std::move(f));
    } catch (const ParseError& e) {
      // Report whichever reading got further.
      if (program_error && program_error->span().start > e.span().start) throw *program_error;
      throw;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(SourceSpan span, std::string expected, const std::string& found)
    : std::runtime_error("parse error at offset " + std::to_string(span.start) + ": expected " +
                         expected + ", found " + found),
      span_(span),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }
Program parse_program(std::string_view text) { return Parser(text).whole_program(); }

// Printer ----------------------------------------------------------------------

namespace {

// Binding strength, loosest first.
enum Level { kImp = 1, kDisj = 2, kConj = 3, kUnary = 4 };
enum ProgLevel { kChoice = 1, kSeq = 2, kStarLevel = 3 };

void print(std::string& out, const Formula& f, int ctx);
void print(std::string& out, const Program& p, int ctx);

int level_of(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return kImp;
    case FormulaKind::Or: return kDisj;
    case FormulaKind::And: return kConj;
    default: return kUnary;
  }
}

int level_of(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Choice: return kChoice;
    case ProgramKind::Seq: return kSeq;
    default: return kStarLevel;
  }
}

void print(std::string& out, const Formula& f, int ctx) {
  const bool paren = level_of(f) < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.name();
      break;
    case FormulaKind::Bottom:
      out += 'F';
      break;
    case FormulaKind::StrongNeg:
      out += '~';
      print(out, f.operand(), kUnary);
      break;
    case FormulaKind::And:
      print(out, f.lhs(), kConj);
      out += " & ";
      print(out, f.rhs(), kUnary);
      break;
    case FormulaKind::Or:
      print(out, f.lhs(), kDisj);
      out += " | ";
      print(out, f.rhs(), kConj);
      break;
    case FormulaKind::Implies:
      print(out, f.lhs(), kDisj);
      out += " -> ";
      print(out, f.rhs(), kImp);
      break;
    case FormulaKind::Box:
      out += '[';
      print(out, f.program(), kChoice);
      out += ']';
      print(out, f.operand(), kUnary);
      break;
    case FormulaKind::Diamond:
      out += '<';
      print(out, f.program(), kChoice);
      out += '>';
      print(out, f.operand(), kUnary);
      break;
  }
  if (paren) out += ')';
}

void print(std::string& out, const Program& p, int ctx) {
  const bool paren = level_of(p) < ctx;
  if (paren) out += '(';
  switch (p.kind()) {
    case ProgramKind::Atomic:
      out += p.name();
      break;
    case ProgramKind::Seq:
      print(out, p.lhs(), kSeq);
      out += ';';
      print(out, p.rhs(), kStarLevel);
      break;
    case ProgramKind::Choice:
      print(out, p.lhs(), kChoice);
      out += '+';
      print(out, p.rhs(), kSeq);
      break;
    case ProgramKind::Star:
      print(out, p.operand(), kStarLevel);
      out += '*';
      break;
    case ProgramKind::Test:
      out += '(';
      print(out, p.formula(), kImp);
      out += ")?";
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string s;
  print(s, f, kImp);
  return s;
}

std::string to_string(const Program& p) {
  std::string s;
  print(s, p, kChoice);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const Program& p) { return os << to_string(p); }

// Traversals -------------------------------------------------------------------

namespace {

struct SubexprCollector {
  std::vector<Subexpression> out;
  std::unordered_set<Formula> seen_f;
  std::unordered_set<Program> seen_p;

  void visit(const Formula& f) {
    if (seen_f.contains(f)) return;
    switch (f.kind()) {
      case FormulaKind::StrongNeg:
        visit(f.operand());
        break;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        visit(f.lhs());
        visit(f.rhs());
        break;
      case FormulaKind::Box:
      case FormulaKind::Diamond:
        visit(f.operand());
        visit(f.program());
        break;
      default:
        break;
    }
    if (seen_f.insert(f).second) out.emplace_back(f);
  }

  void visit(const Program& p) {
    if (seen_p.contains(p)) return;
    switch (p.kind()) {
      case ProgramKind::Seq:
      case ProgramKind::Choice:
        visit(p.lhs());
        visit(p.rhs());
        break;
      case ProgramKind::Star:
        visit(p.operand());
        break;
      case ProgramKind::Test:
        visit(p.formula());
        break;
      default:
        break;
    }
    if (seen_p.insert(p).second) out.emplace_back(p);
  }
};

}  // namespace

std::vector<Subexpression> subexpressions(const Formula& f) {
  SubexprCollector c;
  c.visit(f);
  return std::move(c.out);
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  for (const auto& e : subexpressions(f))
    if (auto* g = std::get_if<Formula>(&e); g && g->kind() == FormulaKind::Atom) out.insert(g->name());
  return out;
}

std::set<std::string> atomic_programs_of(const Formula& f) {
  std::set<std::string> out;
  for (const auto& e : subexpressions(f))
    if (auto* p = std::get_if<Program>(&e); p && p->kind() == ProgramKind::Atomic) out.insert(p->name());
  return out;
}

std::set<std::string> atomic_programs_of(const Program& p) {
  return atomic_programs_of(Formula::box(p, Formula::bottom()));
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s.substr(1))
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace bpdl
