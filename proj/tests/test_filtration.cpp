#include <doctest.h>

#include "bpdl/closure.hpp"
#include "bpdl/eval.hpp"
#include "bpdl/filtration.hpp"
#include "support/random.hpp"

using namespace bpdl;
using bpdl::testing::Generator;

namespace {

Model twins_differing_in_falsity() {
  return load_model(R"({"states": ["x", "y"],
      "atoms": {"p": {"plus": ["x", "y"], "minus": ["x"]}}})");
}

bool has_item(const FiltrationReport& r, int item) {
  for (const auto& v : r.violations)
    if (v.item == item) return true;
  return false;
}

}  // namespace

TEST_CASE("twin states collapse") {
  Model m = load_model(R"({"states": ["x", "y"],
      "atoms": {"p": {"plus": ["x", "y"], "minus": []}}})");
  Filtration f = filtrate(m, fl_closure(parse_formula("p")));
  CHECK(f.quotient.size() == 1);
  CHECK(f.quotient.state_name(0) == "c0");
  CHECK(f.class_of == std::vector<std::size_t>{0, 0});
  CHECK(f.witness == std::vector<std::size_t>{0});
}

TEST_CASE("separated states stay apart") {
  Model m = load_model(R"({"states": ["x", "y", "z"],
      "atoms": {"p": {"plus": ["x"], "minus": ["y"]}}})");
  Filtration f = filtrate(m, fl_closure(parse_formula("p")));
  CHECK(f.quotient.size() == 3);
  CHECK(f.class_of == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("quotient relations and valuations lift pointwise") {
  Model m = load_model(R"({"states": ["x", "y", "z"],
      "atoms": {"p": {"plus": ["y", "z"], "minus": []}},
      "programs": {"a": [["x", "y"], ["z", "z"]]}})");
  Filtration f = filtrate(m, fl_closure(parse_formula("p")));
  REQUIRE(f.quotient.size() == 2);
  CHECK(f.class_of == std::vector<std::size_t>{0, 1, 1});
  CHECK(f.quotient.relation("a").contains(0, 1));
  CHECK(f.quotient.relation("a").contains(1, 1));
  CHECK_FALSE(f.quotient.relation("a").contains(1, 0));
  CHECK(f.quotient.plus("p").test(1));
}

TEST_CASE("lemma holds on random models") {
  Generator g(53);
  int checked = 0;
  while (checked < 200) {
    Model m = g.model(5);
    Formula phi = g.formula(3, 1);
    if (fl_closure(phi).size() > 8) continue;
    ++checked;
    FiltrationReport r = check_filtration_lemma(m, phi);
    REQUIRE_MESSAGE(r.ok(), to_string(phi), " ", (r.violations.empty() ? "" : r.violations[0].detail));
    CHECK(r.quotient_size <= m.size());
  }
}

TEST_CASE("one-state model passes trivially") {
  Model m = load_model(R"({"states": ["x"], "programs": {"a": [["x", "x"]]}})");
  FiltrationReport r = check_filtration_lemma(m, parse_formula("[a*]p"));
  CHECK(r.ok());
  CHECK(r.quotient_size == 1);
}

TEST_CASE("dropping the falsity clause breaks item (vii)") {
  Model m = twins_differing_in_falsity();
  const Formula p = parse_formula("p");
  CHECK(check_filtration_lemma(m, p).ok());
  FiltrationReport bad = check_filtration_lemma(m, p, {6, Equivalence::PlusOnly});
  CHECK_FALSE(bad.ok());
  CHECK(has_item(bad, 7));
  CHECK_FALSE(has_item(bad, 6));
}

TEST_CASE("guard") {
  Model m = load_model(R"({"states": ["a", "b", "c", "d", "e", "f", "g"]})");
  CHECK_THROWS_AS(check_filtration_lemma(m, parse_formula("p")), GuardExceeded);
  CHECK_NOTHROW(check_filtration_lemma(m, parse_formula("p"), {7, Equivalence::BothSigns}));
}

TEST_CASE("filtration preserves closure formulas and is idempotent") {
  Generator g(61);
  for (int i = 0; i < 300; ++i) {
    Model m = g.model(5);
    Formula phi = g.formula(3, 1);
    ClosureSet t = fl_closure(phi);
    if (t.size() > 8) continue;
    Filtration f = filtrate(m, t);
    EvalSession sm(m), sq(f.quotient);
    for (const auto& psi : t)
      for (std::size_t x = 0; x < m.size(); ++x) {
        CHECK(sm.supports(x, psi, Sign::Plus) == sq.supports(f.class_of[x], psi, Sign::Plus));
        CHECK(sm.supports(x, psi, Sign::Minus) == sq.supports(f.class_of[x], psi, Sign::Minus));
      }
    for (std::size_t x = 0; x < m.size(); ++x)
      CHECK(fingerprint(sm, f.witness[f.class_of[x]], t) == fingerprint(sm, x, t));
    for (std::size_t c = 0; c < f.witness.size(); ++c) CHECK(f.class_of[f.witness[c]] == c);
    Filtration again = filtrate(f.quotient, t);
    CHECK(again.quotient.size() == f.quotient.size());
    for (std::size_t c = 0; c < again.class_of.size(); ++c) CHECK(again.class_of[c] == c);
  }
}
