#ifndef BPDL_TESTS_ORACLES_HPP_
#define BPDL_TESTS_ORACLES_HPP_

// Reference implementations that share no code with the library's
// evaluators. They are slow on purpose: pointwise, path-by-path.

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "bpdl/classical.hpp"
#include "bpdl/model.hpp"

namespace bpdl::testing {

using Matrix = std::vector<std::vector<char>>;

inline Matrix to_matrix(const Relation& r) {
  Matrix m(r.size(), std::vector<char>(r.size(), 0));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.contains(i, j);
  return m;
}

inline Matrix compose_oracle(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k] && b[k][j]) c[i][j] = 1;
  return c;
}

// States reachable from x by zero or more steps along the named programs.
inline std::set<std::size_t> reachable_oracle(const Model& m, std::size_t x,
                                              const std::set<std::string>& progs) {
  std::set<std::size_t> seen{x};
  std::deque<std::size_t> todo{x};
  while (!todo.empty()) {
    std::size_t s = todo.front();
    todo.pop_front();
    for (const auto& a : progs)
      for (std::size_t t = 0; t < m.size(); ++t)
        if (m.relation(a).contains(s, t) && seen.insert(t).second) todo.push_back(t);
  }
  return seen;
}

// Classical PDL over the doubled model of m: p+ holds where p is supported,
// p- where it is falsified.
class ClassicalOracle {
 public:
  explicit ClassicalOracle(const Model& m) : m_(m) {}

  bool holds(std::size_t x, const ClassicalFormula& f) const {
    switch (f.kind()) {
      case CKind::Atom:
        return f.polarity() == Sign::Plus ? m_.plus(f.name()).test(x) : m_.minus(f.name()).test(x);
      case CKind::Falsum: return false;
      case CKind::Verum: return true;
      case CKind::And: return holds(x, f.lhs()) && holds(x, f.rhs());
      case CKind::Or: return holds(x, f.lhs()) || holds(x, f.rhs());
      case CKind::Implies: return !holds(x, f.lhs()) || holds(x, f.rhs());
      case CKind::Box:
        for (auto y : successors(x, f.program()))
          if (!holds(y, f.operand())) return false;
        return true;
      case CKind::Diamond:
        for (auto y : successors(x, f.program()))
          if (holds(y, f.operand())) return true;
        return false;
    }
    return false;
  }

  std::set<std::size_t> successors(std::size_t x, const ClassicalProgram& p) const {
    std::set<std::size_t> out;
    switch (p.kind()) {
      case CProgKind::Atomic:
        for (std::size_t y = 0; y < m_.size(); ++y)
          if (m_.relation(p.name()).contains(x, y)) out.insert(y);
        break;
      case CProgKind::Test:
        if (holds(x, p.formula())) out.insert(x);
        break;
      case CProgKind::Seq:
        for (auto y : successors(x, p.lhs()))
          for (auto z : successors(y, p.rhs())) out.insert(z);
        break;
      case CProgKind::Choice:
        out = successors(x, p.lhs());
        for (auto y : successors(x, p.rhs())) out.insert(y);
        break;
      case CProgKind::Star: {
        out.insert(x);
        std::deque<std::size_t> todo{x};
        while (!todo.empty()) {
          std::size_t y = todo.front();
          todo.pop_front();
          for (auto z : successors(y, p.operand()))
            if (out.insert(z).second) todo.push_back(z);
        }
        break;
      }
    }
    return out;
  }

 private:
  const Model& m_;
};

}  // namespace bpdl::testing

#endif  // BPDL_TESTS_ORACLES_HPP_
