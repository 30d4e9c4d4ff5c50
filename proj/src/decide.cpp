#include "bpdl/decide.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "bpdl/eval.hpp"

namespace bpdl {

// Translation ------------------------------------------------------------------

Translation translate(const Formula& phi) {
  using CF = ClassicalFormula;
  switch (phi.kind()) {
    case FormulaKind::Atom:
      return {CF::atom(phi.name(), Sign::Plus), CF::atom(phi.name(), Sign::Minus)};
    case FormulaKind::Bottom:
      return {CF::falsum(), CF::verum()};
    case FormulaKind::StrongNeg: {
      Translation a = translate(phi.operand());
      return {a.f, a.t};
    }
    case FormulaKind::And: {
      Translation a = translate(phi.lhs()), b = translate(phi.rhs());
      return {CF::conj(a.t, b.t), CF::disj(a.f, b.f)};
    }
    case FormulaKind::Or: {
      Translation a = translate(phi.lhs()), b = translate(phi.rhs());
      return {CF::disj(a.t, b.t), CF::conj(a.f, b.f)};
    }
    case FormulaKind::Implies: {
      Translation a = translate(phi.lhs()), b = translate(phi.rhs());
      return {CF::implies(a.t, b.t), CF::conj(a.t, b.f)};
    }
    case FormulaKind::Box: {
      ClassicalProgram p = translate(phi.program());
      Translation a = translate(phi.operand());
      return {CF::box(p, a.t), CF::diamond(p, a.f)};
    }
    case FormulaKind::Diamond: {
      ClassicalProgram p = translate(phi.program());
      Translation a = translate(phi.operand());
      return {CF::diamond(p, a.t), CF::box(p, a.f)};
    }
  }
  return {CF::falsum(), CF::falsum()};
}

ClassicalProgram translate(const Program& alpha) {
  using CP = ClassicalProgram;
  switch (alpha.kind()) {
    case ProgramKind::Atomic:
      return CP::atomic(alpha.name());
    case ProgramKind::Seq:
      return CP::seq(translate(alpha.lhs()), translate(alpha.rhs()));
    case ProgramKind::Choice:
      return CP::choice(translate(alpha.lhs()), translate(alpha.rhs()));
    case ProgramKind::Star:
      return CP::star(translate(alpha.operand()));
    case ProgramKind::Test:
      return CP::test(translate(alpha.formula()).t);
  }
  return CP::atomic("");
}

// Type elimination ---------------------------------------------------------------

namespace {

using CF = ClassicalFormula;
using CP = ClassicalProgram;

CF modal(bool box, CP p, CF f) {
  return box ? CF::box(std::move(p), std::move(f)) : CF::diamond(std::move(p), std::move(f));
}

// Closure of a classical formula under subformulas and the unfolding rules,
// plus every test formula occurring in a program of a member.
class ClassicalClosure {
 public:
  explicit ClassicalClosure(const CF& root) { add(root); }

  const std::vector<CF>& members() const { return members_; }
  std::size_t index(const CF& f) const { return index_.at(f); }

 private:
  void add(const CF& f) {
    if (!index_.emplace(f, members_.size()).second) return;
    members_.push_back(f);
    if (f.is_modal()) {
      const bool box = f.kind() == CKind::Box;
      const CP& p = f.program();
      const CF& body = f.operand();
      switch (p.kind()) {
        case CProgKind::Atomic:
          break;
        case CProgKind::Test:
          add(p.formula());
          break;
        case CProgKind::Choice:
          add(modal(box, p.lhs(), body));
          add(modal(box, p.rhs(), body));
          break;
        case CProgKind::Seq:
          add(modal(box, p.lhs(), modal(box, p.rhs(), body)));
          break;
        case CProgKind::Star:
          add(modal(box, p.operand(), f));
          break;
      }
      add_tests(p);
      add(body);
    } else if (f.kind() == CKind::And || f.kind() == CKind::Or || f.kind() == CKind::Implies) {
      add(f.lhs());
      add(f.rhs());
    }
  }

  void add_tests(const CP& p) {
    switch (p.kind()) {
      case CProgKind::Atomic:
        break;
      case CProgKind::Test:
        add(p.formula());
        break;
      case CProgKind::Star:
        add_tests(p.operand());
        break;
      case CProgKind::Seq:
      case CProgKind::Choice:
        add_tests(p.lhs());
        add_tests(p.rhs());
        break;
    }
  }

  std::vector<CF> members_;
  std::unordered_map<CF, std::size_t> index_;
};

// Local coherence of one closure member with respect to others.
struct Rule {
  enum class Op { Free, One, Zero, Copy, And, Or, Imp } op = Op::Free;
  std::size_t a = 0, b = 0;

  bool holds(bool self, const Bitset& t) const noexcept {
    switch (op) {
      case Op::Free: return true;
      case Op::One: return self;
      case Op::Zero: return !self;
      case Op::Copy: return self == t.test(a);
      case Op::And: return self == (t.test(a) && t.test(b));
      case Op::Or: return self == (t.test(a) || t.test(b));
      case Op::Imp: return self == (!t.test(a) || t.test(b));
    }
    return false;
  }
};

Rule rule_for(const CF& f, const ClassicalClosure& cl) {
  using Op = Rule::Op;
  auto idx = [&](const CF& g) { return cl.index(g); };
  switch (f.kind()) {
    case CKind::Atom: return {Op::Free};
    case CKind::Falsum: return {Op::Zero};
    case CKind::Verum: return {Op::One};
    case CKind::And: return {Op::And, idx(f.lhs()), idx(f.rhs())};
    case CKind::Or: return {Op::Or, idx(f.lhs()), idx(f.rhs())};
    case CKind::Implies: return {Op::Imp, idx(f.lhs()), idx(f.rhs())};
    case CKind::Box:
    case CKind::Diamond: break;
  }
  const bool box = f.kind() == CKind::Box;
  const CP& p = f.program();
  const CF& body = f.operand();
  switch (p.kind()) {
    case CProgKind::Atomic:
      return {Op::Free};
    case CProgKind::Test:
      return {box ? Op::Imp : Op::And, idx(p.formula()), idx(body)};
    case CProgKind::Choice:
      return {box ? Op::And : Op::Or, idx(modal(box, p.lhs(), body)),
              idx(modal(box, p.rhs(), body))};
    case CProgKind::Seq: {
      auto j = idx(modal(box, p.lhs(), modal(box, p.rhs(), body)));
      return {Op::Copy, j, j};
    }
    case CProgKind::Star:
      return {box ? Op::And : Op::Or, idx(body), idx(modal(box, p.operand(), f))};
  }
  return {Op::Free};
}

class Eliminator {
 public:
  Eliminator(const CF& root, const DecideOptions& opts) : opts_(opts), closure_(root) {
    const auto& ms = closure_.members();
    rules_.reserve(ms.size());
    for (const auto& m : ms) rules_.push_back(rule_for(m, closure_));
    enumerate_types();
    build_edges();
  }

  Verdict run(EliminationStats* stats) {
    const std::size_t n = types_.size();
    alive_ = Bitset::full(n);
    std::size_t rounds = 0;
    for (bool changed = true; changed;) {
      changed = false;
      ++rounds;
      const auto& ms = closure_.members();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!ms[i].is_modal()) continue;
        const std::size_t body = closure_.index(ms[i].operand());
        // A diamond needs a successor with the body; a failed box needs a
        // successor without it.
        const bool dia = ms[i].kind() == CKind::Diamond;
        Bitset demanding = dia ? alive_ & has_[i] : alive_ - has_[i];
        if (demanding.none()) continue;
        Bitset targets = dia ? alive_ & has_[body] : alive_ - has_[body];
        Bitset ok = preimage(ms[i].program(), targets);
        Bitset bad = demanding - ok;
        if (bad.any()) {
          alive_ -= bad;
          changed = true;
        }
      }
    }
    if (stats) {
      stats->closure_size = closure_.members().size();
      stats->initial_types = n;
      stats->surviving_types = alive_.count();
      stats->rounds = rounds;
    }
    Bitset roots = alive_ & has_[0];
    if (roots.none()) return {};
    return witness(roots.first());
  }

 private:
  void enumerate_types() {
    const std::size_t k = rules_.size();
    // Post-order over rule dependencies, so a defined member usually comes
    // after what defines it and its bit is forced on assignment.
    std::vector<std::size_t> order;
    std::vector<char> state(k, 0);
    auto deps = [&](std::size_t i) -> std::vector<std::size_t> {
      const Rule& r = rules_[i];
      switch (r.op) {
        case Rule::Op::Free:
        case Rule::Op::One:
        case Rule::Op::Zero: return {};
        case Rule::Op::Copy: return {r.a};
        default: return {r.a, r.b};
      }
    };
    for (std::size_t start = 0; start < k; ++start) {
      if (state[start]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
      state[start] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        auto ds = deps(node);
        if (next < ds.size()) {
          std::size_t d = ds[next++];
          if (!state[d]) {
            state[d] = 1;
            stack.emplace_back(d, 0);
          }
        } else {
          order.push_back(node);
          stack.pop_back();
        }
      }
    }
    std::vector<std::size_t> pos(k);
    for (std::size_t p = 0; p < k; ++p) pos[order[p]] = p;
    checks_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t at = pos[i];
      for (auto d : deps(i)) at = std::max(at, pos[d]);
      checks_[at].push_back(i);
    }
    order_ = std::move(order);
    Bitset cur(k);
    assign(0, cur);
    has_.assign(k, Bitset(types_.size()));
    for (std::size_t t = 0; t < types_.size(); ++t) types_[t].for_each([&](std::size_t i) {
      has_[i].set(t);
    });
  }

  void assign(std::size_t p, Bitset& cur) {
    if (p == order_.size()) {
      if (types_.size() >= opts_.type_limit)
        throw ResourceLimit("more than " + std::to_string(opts_.type_limit) + " Hintikka types");
      types_.push_back(cur);
      return;
    }
    const std::size_t m = order_[p];
    for (bool bit : {false, true}) {
      cur.assign(m, bit);
      bool ok = true;
      for (auto i : checks_[p])
        if (!rules_[i].holds(cur.test(i), cur)) {
          ok = false;
          break;
        }
      if (ok) assign(p + 1, cur);
    }
    cur.reset(m);
  }

  void build_edges() {
    const auto& ms = closure_.members();
    const std::size_t k = ms.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!ms[i].is_modal() || ms[i].program().kind() != CProgKind::Atomic) continue;
      auto& e = edges_[ms[i].program().name()];
      if (e.required.empty()) {
        e.required.assign(types_.size(), Bitset(k));
        e.forbidden.assign(types_.size(), Bitset(k));
      }
      const std::size_t body = closure_.index(ms[i].operand());
      const bool box = ms[i].kind() == CKind::Box;
      for (std::size_t t = 0; t < types_.size(); ++t) {
        const bool in = types_[t].test(i);
        if (box && in) e.required[t].set(body);
        if (!box && !in) e.forbidden[t].set(body);
      }
    }
  }

  Bitset preimage(const CP& p, const Bitset& targets) {
    switch (p.kind()) {
      case CProgKind::Atomic: {
        auto it = edges_.find(p.name());
        if (it == edges_.end()) return Bitset(types_.size());
        return atomic_preimage(types_, it->second.required, it->second.forbidden, alive_, targets,
                               opts_.policy);
      }
      case CProgKind::Seq:
        return preimage(p.lhs(), preimage(p.rhs(), targets));
      case CProgKind::Choice:
        return preimage(p.lhs(), targets) | preimage(p.rhs(), targets);
      case CProgKind::Star: {
        Bitset reach = targets;
        while (true) {
          Bitset next = targets | preimage(p.operand(), reach);
          if (next == reach) return reach;
          reach = std::move(next);
        }
      }
      case CProgKind::Test:
        return targets & has_[closure_.index(p.formula())];
    }
    return Bitset(types_.size());
  }

  bool step(const std::string& prog, std::size_t s, std::size_t t) const {
    const auto& e = edges_.at(prog);
    return e.required[s].is_subset_of(types_[t]) && !e.forbidden[s].intersects(types_[t]);
  }

  // Surviving types reachable from the root, with the type-graph edges.
  Verdict witness(std::size_t root) const {
    std::vector<std::size_t> states{root};
    std::unordered_map<std::size_t, std::size_t> id{{root, 0}};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (const auto& [name, e] : edges_)
        alive_.for_each([&](std::size_t t) {
          if (!id.contains(t) && step(name, s, t)) {
            id.emplace(t, states.size());
            states.push_back(t);
            queue.push_back(t);
          }
        });
    }
    const std::size_t n = states.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    std::map<std::string, Relation> programs;
    for (const auto& [name, e] : edges_) {
      Relation r(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (step(name, states[i], states[j])) r.insert(i, j);
      programs.emplace(name, std::move(r));
    }
    std::map<std::string, StateSet> plus, minus;
    const auto& ms = closure_.members();
    for (std::size_t m = 0; m < ms.size(); ++m) {
      if (ms[m].kind() != CKind::Atom) continue;
      StateSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (types_[states[i]].test(m)) s.set(i);
      (ms[m].polarity() == Sign::Plus ? plus : minus)[ms[m].name()] = std::move(s);
    }
    Verdict v;
    v.satisfiable = true;
    v.witness.emplace(std::move(names), std::move(programs), std::move(plus), std::move(minus));
    v.state = 0;
    return v;
  }

  struct AtomicEdges {
    std::vector<Bitset> required, forbidden;
  };

  DecideOptions opts_;
  ClassicalClosure closure_;
  std::vector<Rule> rules_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<Bitset> types_;
  std::vector<Bitset> has_;  // member -> types containing it
  std::map<std::string, AtomicEdges> edges_;
  Bitset alive_;
};

}  // namespace

Verdict pdl_sat(const ClassicalFormula& psi, const DecideOptions& opts, EliminationStats* stats) {
  Eliminator e(psi, opts);
  return e.run(stats);
}

Verdict sat(const Formula& phi, const DecideOptions& opts) {
  Verdict v = pdl_sat(translate(phi).t, opts);
  if (v.satisfiable && !supports(*v.witness, v.state, phi, Sign::Plus))
    throw std::logic_error("satisfiability witness failed re-check for " + to_string(phi));
  return v;
}

Verdict find_countermodel(const Formula& phi, const DecideOptions& opts) {
  return sat(Formula::neg(phi), opts);
}

bool valid(const Formula& phi, const DecideOptions& opts) {
  return !find_countermodel(phi, opts).satisfiable;
}

Formula global_reduction(const std::vector<Formula>& premises, const Formula& phi) {
  std::set<std::string> progs = atomic_programs_of(phi);
  for (const auto& x : premises) progs.merge(atomic_programs_of(x));
  Formula all = premises.empty() ? Formula::top() : premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) all = Formula::conj(all, premises[i]);
  if (progs.empty()) return Formula::implies(all, phi);
  auto it = progs.begin();
  Program any = Program::atomic(*it);
  for (++it; it != progs.end(); ++it) any = Program::choice(any, Program::atomic(*it));
  return Formula::implies(Formula::box(Program::star(any), all), phi);
}

bool global_consequence(const std::vector<Formula>& premises, const Formula& phi,
                        const DecideOptions& opts) {
  return valid(global_reduction(premises, phi), opts);
}

std::optional<std::pair<Model, std::size_t>> bounded_countermodel_search(
    const Formula& phi, std::size_t max_states, ExecutionPolicy policy) {
  const MaskEvaluator ev(phi);
  for (std::size_t n = 1; n <= max_states; ++n) {
    auto hit = enumerate_models(ev, n, policy);
    if (!hit) continue;
    const ModelSpace sp{n, ev.atoms().size(), ev.programs().size()};
    std::vector<std::uint64_t> plus, minus, rows;
    decode_model(sp, hit->index, plus, minus, rows);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    std::map<std::string, StateSet> vp, vm;
    for (std::size_t a = 0; a < sp.atoms; ++a) {
      StateSet p(n), m(n);
      for (std::size_t i = 0; i < n; ++i) {
        if ((plus[a] >> i) & 1u) p.set(i);
        if ((minus[a] >> i) & 1u) m.set(i);
      }
      vp.emplace(ev.atoms()[a], std::move(p));
      vm.emplace(ev.atoms()[a], std::move(m));
    }
    std::map<std::string, Relation> progs;
    for (std::size_t j = 0; j < sp.programs; ++j) {
      Relation r(n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if ((rows[j * n + x] >> y) & 1u) r.insert(x, y);
      progs.emplace(ev.programs()[j], std::move(r));
    }
    return std::make_pair(Model(std::move(names), std::move(progs), std::move(vp), std::move(vm)),
                          hit->state);
  }
  return std::nullopt;
}

}  // namespace bpdl
