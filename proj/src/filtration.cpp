#include "bpdl/filtration.hpp"

#include <map>

namespace bpdl {

namespace {

using Key = std::vector<std::uint8_t>;

Key class_key(EvalSession& s, std::size_t x, const ClosureSet& t, Equivalence eq) {
  Key k;
  k.reserve(t.size());
  for (const auto& f : t) {
    const TruthSets& ts = s.truth_sets(f);
    std::uint8_t v = ts.plus.test(x) ? 1 : 0;
    if (eq == Equivalence::BothSigns && ts.minus.test(x)) v |= 2;
    k.push_back(v);
  }
  return k;
}

bool within_four_power(std::size_t count, std::size_t exponent) {
  if (exponent >= 31) return true;
  return count <= (std::size_t{1} << (2 * exponent));
}

}  // namespace

Filtration filtrate(const Model& m, const ClosureSet& t, Equivalence eq) {
  EvalSession session(m);
  std::map<Key, std::size_t> classes;
  Filtration out{m, {}, {}};
  out.class_of.resize(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto [it, fresh] = classes.emplace(class_key(session, x, t, eq), out.witness.size());
    if (fresh) out.witness.push_back(x);
    out.class_of[x] = it->second;
  }
  const std::size_t k = out.witness.size();

  std::vector<std::string> names;
  for (std::size_t c = 0; c < k; ++c) names.push_back("c" + std::to_string(c));

  std::map<std::string, Relation> programs;
  for (const auto& [name, rel] : m.programs()) {
    Relation r(k);
    for (auto [x, y] : rel.pairs()) r.insert(out.class_of[x], out.class_of[y]);
    programs.emplace(name, std::move(r));
  }
  auto lift = [&](const StateSet& s) {
    StateSet q(k);
    s.for_each([&](std::size_t x) { q.set(out.class_of[x]); });
    return q;
  };
  std::map<std::string, StateSet> plus, minus;
  for (const auto& [name, s] : m.plus_valuation()) plus.emplace(name, lift(s));
  for (const auto& [name, s] : m.minus_valuation()) minus.emplace(name, lift(s));
  out.quotient = Model(std::move(names), std::move(programs), std::move(plus), std::move(minus));
  return out;
}

FiltrationReport check_filtration_lemma(const Model& m, const Formula& f,
                                        const FiltrationCheckOptions& opts) {
  if (m.size() > opts.max_states)
    throw GuardExceeded("model has " + std::to_string(m.size()) + " states; bound is " +
                        std::to_string(opts.max_states));
  const ClosureSet closure = fl_closure(f);
  const Filtration filt = filtrate(m, closure, opts.equivalence);
  const Model& q = filt.quotient;
  const auto& cls = filt.class_of;
  const std::size_t n = m.size();

  FiltrationReport rep;
  rep.closure_size = closure.size();
  rep.quotient_size = q.size();
  rep.size_bound_holds = within_four_power(q.size(), closure.size());

  EvalSession sm(m), sq(q);
  auto violate = [&](int item, const Formula& g, std::size_t x, std::size_t y) {
    rep.violations.push_back({item, to_string(g) + " at (" + m.state_name(x) + ", " +
                                        m.state_name(y) + ")"});
  };

  for (const auto& g : closure) {
    if (!g.is_modal()) continue;
    const bool box = g.kind() == FormulaKind::Box;
    const Relation& rm = sm.relation_of(g.program());
    const Relation& rq = sq.relation_of(g.program());
    const TruthSets& whole = sm.truth_sets(g);
    const TruthSets& body = sm.truth_sets(g.operand());

    // (i) original transitions survive in the quotient.
    for (auto [x, y] : rm.pairs()) {
      ++rep.checked[0];
      if (!rq.contains(cls[x], cls[y])) violate(1, g, x, y);
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!rq.contains(cls[x], cls[y])) continue;
        if (box) {
          // (ii) and (v)
          ++rep.checked[1];
          if (whole.plus.test(x) && !body.plus.test(y)) violate(2, g, x, y);
          ++rep.checked[4];
          if (body.minus.test(y) && !whole.minus.test(x)) violate(5, g, x, y);
        } else {
          // (iii) and (iv)
          ++rep.checked[2];
          if (body.plus.test(y) && !whole.plus.test(x)) violate(3, g, x, y);
          ++rep.checked[3];
          if (whole.minus.test(x) && !body.minus.test(y)) violate(4, g, x, y);
        }
      }
    }
  }

  // (vi) and (vii): both signs transfer to the class.
  for (const auto& g : closure) {
    const TruthSets& orig = sm.truth_sets(g);
    const TruthSets& quot = sq.truth_sets(g);
    for (std::size_t x = 0; x < n; ++x) {
      ++rep.checked[5];
      if (orig.plus.test(x) != quot.plus.test(cls[x])) violate(6, g, x, filt.witness[cls[x]]);
      ++rep.checked[6];
      if (orig.minus.test(x) != quot.minus.test(cls[x])) violate(7, g, x, filt.witness[cls[x]]);
    }
  }
  return rep;
}

}  // namespace bpdl
