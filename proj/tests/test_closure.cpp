#include <doctest.h>

#include <set>

#include "bpdl/closure.hpp"
#include "bpdl/eval.hpp"
#include "support/random.hpp"

using namespace bpdl;
using bpdl::testing::Generator;

namespace {

std::vector<std::string> listing(const char* text) {
  std::vector<std::string> out;
  for (const auto& g : fl_closure(parse_formula(text))) out.push_back(to_string(g));
  return out;
}

}  // namespace

TEST_CASE("closure examples in order") {
  CHECK(listing("p") == std::vector<std::string>{"p"});
  CHECK(listing("[a*]p") == std::vector<std::string>{"[a*]p", "[a][a*]p", "p"});
  CHECK(listing("<a;b>p") == std::vector<std::string>{"<a;b>p", "<a><b>p", "<b>p", "p"});
  CHECK(listing("[(q)?]p") == std::vector<std::string>{"[(q)?]p", "q", "p"});
  CHECK(listing("<a+b>p") == std::vector<std::string>{"<a+b>p", "<a>p", "p", "<b>p"});
}

TEST_CASE("closure is a fixpoint containing all subformulas") {
  Generator g(41);
  for (int i = 0; i < 1000; ++i) {
    Formula phi = g.formula(4);
    ClosureSet cl = fl_closure(phi);
    CHECK(cl.origin() == phi);
    CHECK(cl[0] == phi);
    for (const auto& m : cl) {
      for (const auto& s : unfolding_successors(m)) CHECK(cl.contains(s));
      for (const auto& s : immediate_subformulas(m)) CHECK(cl.contains(s));
    }
    for (const auto& e : subexpressions(phi))
      if (const Formula* sf = std::get_if<Formula>(&e)) CHECK(cl.contains(*sf));
    CHECK(cl.size() <= 2 * phi.size());
    std::set<std::string> seen;
    for (const auto& m : cl) CHECK(seen.insert(to_string(m)).second);
    CHECK(cl.index_of(phi) == std::optional<std::size_t>{0});
  }
}

TEST_CASE("closure order is deterministic") {
  Generator g1(43), g2(43);
  for (int i = 0; i < 100; ++i) {
    Formula a = g1.formula(4), b = g2.formula(4);
    CHECK(fl_closure(a).members() == fl_closure(b).members());
  }
}

TEST_CASE("fingerprints") {
  Model m = load_model(R"({"states": ["x", "y", "z"],
      "atoms": {"p": {"plus": ["x", "y"], "minus": ["x", "y"]}},
      "programs": {"a": [["x", "z"], ["y", "z"]]}})");
  ClosureSet t = fl_closure(parse_formula("p"));
  CHECK(fingerprint(m, 0, t) == Fingerprint{BelnapValue::Both});

  // x and y are twins: same valuation, same successors.
  ClosureSet t2 = fl_closure(parse_formula("[a*]p | <a>~p"));
  CHECK(fingerprint(m, 0, t2) == fingerprint(m, 1, t2));
  CHECK(fingerprint(m, 0, t2) != fingerprint(m, 2, t2));
  CHECK(fingerprint(m, 0, t2).size() == t2.size());
}

TEST_CASE("distinct fingerprints never exceed 4^|T|") {
  Generator g(47, {{"p"}, {"a"}});
  for (int i = 0; i < 200; ++i) {
    Model m = g.model(8);
    ClosureSet t = fl_closure(g.formula(1, 0));
    EvalSession s(m);
    std::set<Fingerprint> fps;
    for (std::size_t x = 0; x < m.size(); ++x) fps.insert(fingerprint(s, x, t));
    CHECK(fps.size() <= (std::size_t{1} << (2 * t.size())));
  }
}
