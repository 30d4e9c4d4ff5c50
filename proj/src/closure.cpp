#include "bpdl/closure.hpp"

namespace bpdl {

std::vector<Formula> unfolding_successors(const Formula& f) {
  if (!f.is_modal()) return {};
  const bool box = f.kind() == FormulaKind::Box;
  auto modal = [box](Program p, Formula g) {
    return box ? Formula::box(std::move(p), std::move(g))
               : Formula::diamond(std::move(p), std::move(g));
  };
  const Program& p = f.program();
  const Formula& body = f.operand();
  switch (p.kind()) {
    case ProgramKind::Atomic:
      return {};
    case ProgramKind::Test:
      return {p.formula()};
    case ProgramKind::Choice:
      return {modal(p.lhs(), body), modal(p.rhs(), body)};
    case ProgramKind::Seq:
      return {modal(p.lhs(), modal(p.rhs(), body))};
    case ProgramKind::Star:
      return {modal(p.operand(), f)};
  }
  return {};
}

std::vector<Formula> immediate_subformulas(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::StrongNeg:
    case FormulaKind::Box:
    case FormulaKind::Diamond:
      return {f.operand()};
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return {f.lhs(), f.rhs()};
    default:
      return {};
  }
}

ClosureSet::ClosureSet(Formula seed) : origin_(std::move(seed)) { add(origin_); }

void ClosureSet::add(const Formula& f) {
  if (!index_.emplace(f, members_.size()).second) return;
  members_.push_back(f);
  for (const auto& g : unfolding_successors(f)) add(g);
  for (const auto& g : immediate_subformulas(f)) add(g);
}

std::optional<std::size_t> ClosureSet::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClosureSet fl_closure(const Formula& f) { return ClosureSet(f); }

Fingerprint fingerprint(EvalSession& session, std::size_t x, const ClosureSet& t) {
  Fingerprint fp;
  fp.reserve(t.size());
  for (const auto& f : t) fp.push_back(session.belnap_value(x, f));
  return fp;
}

Fingerprint fingerprint(const Model& m, std::size_t x, const ClosureSet& t) {
  EvalSession s(m);
  return fingerprint(s, x, t);
}

}  // namespace bpdl
