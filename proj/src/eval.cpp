#include "bpdl/eval.hpp"

namespace bpdl {

BelnapValue belnap_of(bool supported, bool falsified) noexcept {
  if (supported) return falsified ? BelnapValue::Both : BelnapValue::TrueOnly;
  return falsified ? BelnapValue::FalseOnly : BelnapValue::Neither;
}

std::string_view to_string(BelnapValue v) noexcept {
  switch (v) {
    case BelnapValue::TrueOnly: return "TrueOnly";
    case BelnapValue::FalseOnly: return "FalseOnly";
    case BelnapValue::Both: return "Both";
    case BelnapValue::Neither: return "Neither";
  }
  return "?";
}

const TruthSets& EvalSession::truth_sets(const Formula& f) {
  if (auto it = formulas_.find(f); it != formulas_.end()) return it->second;
  TruthSets t = compute(f);
  return formulas_.emplace(f, std::move(t)).first->second;
}

const Relation& EvalSession::relation_of(const Program& p) {
  if (auto it = programs_.find(p); it != programs_.end()) return it->second;
  Relation r = compute(p);
  return programs_.emplace(p, std::move(r)).first->second;
}

TruthSets EvalSession::compute(const Formula& f) {
  const std::size_t n = model_.size();
  switch (f.kind()) {
    case FormulaKind::Atom:
      return {model_.plus(f.name()), model_.minus(f.name())};
    case FormulaKind::Bottom:
      return {StateSet(n), StateSet::full(n)};
    case FormulaKind::StrongNeg: {
      const TruthSets& a = truth_sets(f.operand());
      return {a.minus, a.plus};
    }
    case FormulaKind::And: {
      TruthSets a = truth_sets(f.lhs());
      const TruthSets& b = truth_sets(f.rhs());
      return {a.plus & b.plus, a.minus | b.minus};
    }
    case FormulaKind::Or: {
      TruthSets a = truth_sets(f.lhs());
      const TruthSets& b = truth_sets(f.rhs());
      return {a.plus | b.plus, a.minus & b.minus};
    }
    case FormulaKind::Implies: {
      TruthSets a = truth_sets(f.lhs());
      const TruthSets& b = truth_sets(f.rhs());
      return {a.plus.complement() | b.plus, a.plus & b.minus};
    }
    case FormulaKind::Box: {
      TruthSets a = truth_sets(f.operand());
      const Relation& r = relation_of(f.program());
      return {universal_preimage(r, a.plus), existential_preimage(r, a.minus)};
    }
    case FormulaKind::Diamond: {
      TruthSets a = truth_sets(f.operand());
      const Relation& r = relation_of(f.program());
      return {existential_preimage(r, a.plus), universal_preimage(r, a.minus)};
    }
  }
  return {StateSet(n), StateSet(n)};
}

Relation EvalSession::compute(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic:
      return model_.relation(p.name());
    case ProgramKind::Seq: {
      Relation a = relation_of(p.lhs());
      return compose(a, relation_of(p.rhs()));
    }
    case ProgramKind::Choice: {
      Relation a = relation_of(p.lhs());
      return a | relation_of(p.rhs());
    }
    case ProgramKind::Star: {
      Relation a = relation_of(p.operand());
      return rtc(a);
    }
    case ProgramKind::Test:
      return Relation::diagonal(truth_sets(p.formula()).plus);
  }
  return Relation(model_.size());
}

bool EvalSession::supports(std::size_t x, const Formula& f, Sign sign) {
  const TruthSets& t = truth_sets(f);
  return (sign == Sign::Plus ? t.plus : t.minus).test(x);
}

BelnapValue EvalSession::belnap_value(std::size_t x, const Formula& f) {
  const TruthSets& t = truth_sets(f);
  return belnap_of(t.plus.test(x), t.minus.test(x));
}

bool EvalSession::valid(const Formula& f) { return truth_sets(f).plus.all(); }

bool EvalSession::entails(const std::vector<Formula>& premises, const Formula& f) {
  StateSet common = model_.all_states();
  for (const auto& p : premises) common &= truth_sets(p).plus;
  return common.is_subset_of(truth_sets(f).plus);
}

TruthSets truth_sets(const Model& m, const Formula& f) { return EvalSession(m).truth_sets(f); }
Relation relation_of(const Model& m, const Program& p) { return EvalSession(m).relation_of(p); }
bool supports(const Model& m, std::size_t x, const Formula& f, Sign sign) {
  return EvalSession(m).supports(x, f, sign);
}
BelnapValue belnap_value(const Model& m, std::size_t x, const Formula& f) {
  return EvalSession(m).belnap_value(x, f);
}
bool valid_in_model(const Model& m, const Formula& f) { return EvalSession(m).valid(f); }
bool entails_in_model(const Model& m, const std::vector<Formula>& premises, const Formula& f) {
  return EvalSession(m).entails(premises, f);
}

}  // namespace bpdl
