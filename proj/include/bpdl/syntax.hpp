#ifndef BPDL_SYNTAX_HPP_
#define BPDL_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bpdl {

enum class FormulaKind : std::uint8_t { Atom, Bottom, StrongNeg, And, Or, Implies, Box, Diamond };
enum class ProgramKind : std::uint8_t { Atomic, Seq, Choice, Star, Test };

namespace detail {
struct FormulaNode;
struct ProgramNode;
}  // namespace detail

class Program;

// Immutable, shared formula tree. Copies are cheap handles; equality is
// structural and purely syntactic. A default-constructed Formula is an empty
// handle and must not be inspected.
class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula strong_neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula box(Program p, Formula f);
  static Formula diamond(Program p, Formula f);

  // Defined connectives. These expand at construction; they are never nodes.
  static Formula neg(Formula f);  // f -> F
  static Formula top();           // F -> F
  static Formula iff(Formula l, Formula r);

  FormulaKind kind() const noexcept;
  const std::string& name() const noexcept;    // Atom
  const Formula& operand() const noexcept;     // StrongNeg, Box, Diamond
  const Formula& lhs() const noexcept;         // And, Or, Implies
  const Formula& rhs() const noexcept;         // And, Or, Implies
  const Program& program() const noexcept;     // Box, Diamond

  bool is_binary() const noexcept {
    auto k = kind();
    return k == FormulaKind::And || k == FormulaKind::Or || k == FormulaKind::Implies;
  }
  bool is_modal() const noexcept {
    return kind() == FormulaKind::Box || kind() == FormulaKind::Diamond;
  }

  std::size_t hash() const noexcept;
  // Number of formula and program nodes.
  std::size_t size() const noexcept;
  bool empty() const noexcept { return !node_; }
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

class Program {
 public:
  Program() = default;

  static Program atomic(std::string name);
  static Program seq(Program l, Program r);
  static Program choice(Program l, Program r);
  static Program star(Program p);
  static Program test(Formula f);

  ProgramKind kind() const noexcept;
  const std::string& name() const noexcept;  // Atomic
  const Program& lhs() const noexcept;       // Seq, Choice
  const Program& rhs() const noexcept;       // Seq, Choice
  const Program& operand() const noexcept;   // Star
  const Formula& formula() const noexcept;   // Test

  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return !node_; }
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Program& a, const Program& b) noexcept;

 private:
  explicit Program(std::shared_ptr<const detail::ProgramNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::ProgramNode> node_;
};

namespace detail {
struct FormulaNode {
  FormulaKind kind;
  std::string name;
  Formula a, b;
  Program prog;
  std::size_t hash = 0;
  std::size_t size = 1;
};
struct ProgramNode {
  ProgramKind kind;
  std::string name;
  Program a, b;
  Formula test;
  std::size_t hash = 0;
  std::size_t size = 1;
};
}  // namespace detail

inline FormulaKind Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline const Formula& Formula::operand() const noexcept { return node_->a; }
inline const Formula& Formula::lhs() const noexcept { return node_->a; }
inline const Formula& Formula::rhs() const noexcept { return node_->b; }
inline const Program& Formula::program() const noexcept { return node_->prog; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }
inline std::size_t Formula::size() const noexcept { return node_->size; }

inline ProgramKind Program::kind() const noexcept { return node_->kind; }
inline const std::string& Program::name() const noexcept { return node_->name; }
inline const Program& Program::lhs() const noexcept { return node_->a; }
inline const Program& Program::rhs() const noexcept { return node_->b; }
inline const Program& Program::operand() const noexcept { return node_->a; }
inline const Formula& Program::formula() const noexcept { return node_->test; }
inline std::size_t Program::hash() const noexcept { return node_->hash; }
inline std::size_t Program::size() const noexcept { return node_->size; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};
struct ProgramHash {
  std::size_t operator()(const Program& p) const noexcept { return p.hash(); }
};

// Character offsets into the parsed text, half-open.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected, const std::string& found);

  const SourceSpan& span() const noexcept { return span_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  SourceSpan span_;
  std::string expected_;
};

Formula parse_formula(std::string_view text);
Program parse_program(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const Program& p);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Program& p);

using Subexpression = std::variant<Formula, Program>;

// All subformulas and subprograms, each once, in post-order. Operands of a
// modality are visited before its program; tests contribute their formula.
std::vector<Subexpression> subexpressions(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atomic_programs_of(const Formula& f);
std::set<std::string> atomic_programs_of(const Program& p);

bool is_identifier(std::string_view s) noexcept;

}  // namespace bpdl

template <>
struct std::hash<bpdl::Formula> {
  std::size_t operator()(const bpdl::Formula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<bpdl::Program> {
  std::size_t operator()(const bpdl::Program& p) const noexcept { return p.hash(); }
};

#endif  // BPDL_SYNTAX_HPP_
