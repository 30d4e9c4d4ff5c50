#ifndef BPDL_CLASSICAL_HPP_
#define BPDL_CLASSICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "bpdl/eval.hpp"

namespace bpdl {

// Two-valued PDL over doubled atoms: every source atom p yields p+ (p is
// supported) and p- (p is falsified). There is no strong negation.
enum class CKind : std::uint8_t { Atom, Falsum, Verum, And, Or, Implies, Box, Diamond };
enum class CProgKind : std::uint8_t { Atomic, Seq, Choice, Star, Test };

namespace detail {
struct CFormulaNode;
struct CProgramNode;
}  // namespace detail

class ClassicalProgram;

class ClassicalFormula {
 public:
  ClassicalFormula() = default;

  static ClassicalFormula atom(std::string name, Sign polarity);
  static ClassicalFormula falsum();
  static ClassicalFormula verum();
  static ClassicalFormula conj(ClassicalFormula l, ClassicalFormula r);
  static ClassicalFormula disj(ClassicalFormula l, ClassicalFormula r);
  static ClassicalFormula implies(ClassicalFormula l, ClassicalFormula r);
  static ClassicalFormula box(ClassicalProgram p, ClassicalFormula f);
  static ClassicalFormula diamond(ClassicalProgram p, ClassicalFormula f);

  CKind kind() const noexcept;
  const std::string& name() const noexcept;
  Sign polarity() const noexcept;
  const ClassicalFormula& lhs() const noexcept;
  const ClassicalFormula& rhs() const noexcept;
  const ClassicalFormula& operand() const noexcept;
  const ClassicalProgram& program() const noexcept;
  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return !node_; }
  bool is_modal() const noexcept { return kind() == CKind::Box || kind() == CKind::Diamond; }

  friend bool operator==(const ClassicalFormula& a, const ClassicalFormula& b) noexcept;

 private:
  explicit ClassicalFormula(std::shared_ptr<const detail::CFormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::CFormulaNode> node_;
};

class ClassicalProgram {
 public:
  ClassicalProgram() = default;

  static ClassicalProgram atomic(std::string name);
  static ClassicalProgram seq(ClassicalProgram l, ClassicalProgram r);
  static ClassicalProgram choice(ClassicalProgram l, ClassicalProgram r);
  static ClassicalProgram star(ClassicalProgram p);
  static ClassicalProgram test(ClassicalFormula f);

  CProgKind kind() const noexcept;
  const std::string& name() const noexcept;
  const ClassicalProgram& lhs() const noexcept;
  const ClassicalProgram& rhs() const noexcept;
  const ClassicalProgram& operand() const noexcept;
  const ClassicalFormula& formula() const noexcept;
  std::size_t hash() const noexcept;
  bool empty() const noexcept { return !node_; }

  friend bool operator==(const ClassicalProgram& a, const ClassicalProgram& b) noexcept;

 private:
  explicit ClassicalProgram(std::shared_ptr<const detail::CProgramNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::CProgramNode> node_;
};

namespace detail {
struct CFormulaNode {
  CKind kind;
  std::string name;
  Sign polarity = Sign::Plus;
  ClassicalFormula a, b;
  ClassicalProgram prog;
  std::size_t hash = 0;
  std::size_t size = 1;
};
struct CProgramNode {
  CProgKind kind;
  std::string name;
  ClassicalProgram a, b;
  ClassicalFormula test;
  std::size_t hash = 0;
};
}  // namespace detail

inline CKind ClassicalFormula::kind() const noexcept { return node_->kind; }
inline const std::string& ClassicalFormula::name() const noexcept { return node_->name; }
inline Sign ClassicalFormula::polarity() const noexcept { return node_->polarity; }
inline const ClassicalFormula& ClassicalFormula::lhs() const noexcept { return node_->a; }
inline const ClassicalFormula& ClassicalFormula::rhs() const noexcept { return node_->b; }
inline const ClassicalFormula& ClassicalFormula::operand() const noexcept { return node_->a; }
inline const ClassicalProgram& ClassicalFormula::program() const noexcept { return node_->prog; }
inline std::size_t ClassicalFormula::hash() const noexcept { return node_->hash; }
inline std::size_t ClassicalFormula::size() const noexcept { return node_->size; }

inline CProgKind ClassicalProgram::kind() const noexcept { return node_->kind; }
inline const std::string& ClassicalProgram::name() const noexcept { return node_->name; }
inline const ClassicalProgram& ClassicalProgram::lhs() const noexcept { return node_->a; }
inline const ClassicalProgram& ClassicalProgram::rhs() const noexcept { return node_->b; }
inline const ClassicalProgram& ClassicalProgram::operand() const noexcept { return node_->a; }
inline const ClassicalFormula& ClassicalProgram::formula() const noexcept { return node_->test; }
inline std::size_t ClassicalProgram::hash() const noexcept { return node_->hash; }

std::string to_string(const ClassicalFormula& f);
std::string to_string(const ClassicalProgram& p);
std::ostream& operator<<(std::ostream& os, const ClassicalFormula& f);

}  // namespace bpdl

template <>
struct std::hash<bpdl::ClassicalFormula> {
  std::size_t operator()(const bpdl::ClassicalFormula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<bpdl::ClassicalProgram> {
  std::size_t operator()(const bpdl::ClassicalProgram& p) const noexcept { return p.hash(); }
};

#endif  // BPDL_CLASSICAL_HPP_
