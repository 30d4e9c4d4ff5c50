#ifndef BPDL_CLOSURE_HPP_
#define BPDL_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bpdl/eval.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl {

// Fischer–Ladner closure of a seed formula. Members are kept in insertion
// order of the fixpoint computation: each new member is expanded (modal
// unfolding first, then immediate subformulas) before its siblings.
class ClosureSet {
 public:
  explicit ClosureSet(Formula seed);

  const Formula& origin() const noexcept { return origin_; }
  const std::vector<Formula>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Formula& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const Formula& f) const { return index_.contains(f); }
  std::optional<std::size_t> index_of(const Formula& f) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

 private:
  void add(const Formula& f);

  Formula origin_;
  std::vector<Formula> members_;
  std::unordered_map<Formula, std::size_t> index_;
};

ClosureSet fl_closure(const Formula& f);

// Formulas the closure rules derive directly from f (before subformulas).
std::vector<Formula> unfolding_successors(const Formula& f);
std::vector<Formula> immediate_subformulas(const Formula& f);

// Belnap value of every closure member at one state, in closure order.
using Fingerprint = std::vector<BelnapValue>;

Fingerprint fingerprint(EvalSession& session, std::size_t x, const ClosureSet& t);
Fingerprint fingerprint(const Model& m, std::size_t x, const ClosureSet& t);

}  // namespace bpdl

#endif  // BPDL_CLOSURE_HPP_
