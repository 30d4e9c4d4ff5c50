#include <doctest.h>

#include "bpdl/syntax.hpp"
#include "support/random.hpp"

using namespace bpdl;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Program a() { return Program::atomic("a"); }

std::string sub_text(const Subexpression& s) {
  return std::visit([](const auto& x) { return to_string(x); }, s);
}

}  // namespace

TEST_CASE("parse maps constructors directly") {
  CHECK(parse_formula("p & ~p") == Formula::conj(p(), Formula::strong_neg(p())));
  CHECK(parse_formula("[a*](p -> [a]p)") ==
        Formula::box(Program::star(a()), Formula::implies(p(), Formula::box(a(), p()))));
  CHECK(parse_formula("<a>p") == Formula::diamond(a(), p()));
  CHECK(parse_formula("F") == Formula::bottom());
}

TEST_CASE("sugar expands to its definition") {
  CHECK(parse_formula("!p") == Formula::implies(p(), Formula::bottom()));
  CHECK(parse_formula("T") == Formula::implies(Formula::bottom(), Formula::bottom()));
  CHECK(parse_formula("p <-> q") ==
        Formula::conj(Formula::implies(p(), q()), Formula::implies(q(), p())));
  CHECK(to_string(parse_formula("!p")) == "p -> F");
}

TEST_CASE("programs") {
  CHECK(parse_program("a;b") == Program::seq(a(), Program::atomic("b")));
  CHECK(parse_program("(a+b)*") == Program::star(Program::choice(a(), Program::atomic("b"))));
  CHECK(parse_program("(p & ~p)?") == Program::test(Formula::conj(p(), Formula::strong_neg(p()))));
  CHECK(parse_program("a;b+c") ==
        Program::choice(Program::seq(a(), Program::atomic("b")), Program::atomic("c")));
  CHECK(parse_program("a**") == Program::star(Program::star(a())));
  CHECK(parse_program("((p)?)*") == Program::star(Program::test(p())));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("p -> q -> p") == Formula::implies(p(), Formula::implies(q(), p())));
  CHECK(parse_formula("p & q | p") == Formula::disj(Formula::conj(p(), q()), p()));
  CHECK(parse_formula("p | q -> p") == Formula::implies(Formula::disj(p(), q()), p()));
  CHECK(parse_formula("~p & q") == Formula::conj(Formula::strong_neg(p()), q()));
  CHECK(parse_formula("[a]p & q") == Formula::conj(Formula::box(a(), p()), q()));
  CHECK(parse_formula("p & q & p") == Formula::conj(Formula::conj(p(), q()), p()));
}

TEST_CASE("printer output") {
  CHECK(to_string(Formula::conj(p(), Formula::strong_neg(p()))) == "p & ~p");
  CHECK(to_string(Formula::box(Program::star(a()), p())) == "[a*]p");
  CHECK(to_string(Formula::conj(p(), Formula::conj(q(), p()))) == "p & (q & p)");
  CHECK(to_string(Formula::implies(Formula::implies(p(), q()), p())) == "(p -> q) -> p");
  CHECK(to_string(Formula::box(Program::test(Formula::conj(p(), q())), p())) == "[(p & q)?]p");
}

TEST_CASE("atom and program names share one lexicon") {
  Formula f = parse_formula("[p]p");
  CHECK(f == Formula::box(Program::atomic("p"), p()));
}

TEST_CASE("parse errors carry spans") {
  try {
    parse_formula("p & ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().start == 4);
    CHECK(e.span().start <= e.span().end);
  }
  CHECK_THROWS_AS(parse_formula("p ? q"), ParseError);
  CHECK_THROWS_AS(parse_formula("[a p"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_program("p?"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("subexpressions in post-order") {
  auto s = subexpressions(p());
  REQUIRE(s.size() == 1);
  CHECK(sub_text(s[0]) == "p");

  std::vector<std::string> got;
  for (const auto& e : subexpressions(parse_formula("[a]p"))) got.push_back(sub_text(e));
  CHECK(got == std::vector<std::string>{"p", "a", "[a]p"});

  got.clear();
  for (const auto& e : subexpressions(parse_formula("<(q)?>p"))) got.push_back(sub_text(e));
  CHECK(got == std::vector<std::string>{"p", "q", "(q)?", "<(q)?>p"});

  got.clear();
  for (const auto& e : subexpressions(parse_formula("p & p"))) got.push_back(sub_text(e));
  CHECK(got == std::vector<std::string>{"p", "p & p"});
}

TEST_CASE("atoms and atomic programs") {
  Formula f = parse_formula("[a;(q)?]p | <b*>r");
  CHECK(atoms_of(f) == std::set<std::string>{"p", "q", "r"});
  CHECK(atomic_programs_of(f) == std::set<std::string>{"a", "b"});
}

TEST_CASE("random round trip") {
  bpdl::testing::Generator g(7);
  for (int i = 0; i < 2000; ++i) {
    Formula f = g.formula(6);
    std::string text = to_string(f);
    Formula back = parse_formula(text);
    REQUIRE_MESSAGE(back == f, text);
    CHECK(to_string(back) == text);
  }
  for (int i = 0; i < 500; ++i) {
    Program pr = g.program(4);
    REQUIRE(parse_program(to_string(pr)) == pr);
  }
}
