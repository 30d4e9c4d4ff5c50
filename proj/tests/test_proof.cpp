#include <doctest.h>

#include <set>

#include "bpdl/eval.hpp"
#include "bpdl/model.hpp"
#include "bpdl/proof.hpp"
#include "support/mutate.hpp"
#include "support/random.hpp"

using namespace bpdl;
using bpdl::testing::Generator;

namespace {

Formula f(const char* text) { return parse_formula(text); }

const Schema& schema(const char* id) {
  const Schema* s = find_schema(id);
  REQUIRE(s != nullptr);
  return *s;
}

ProofDoc doc(std::vector<std::pair<const char*, const char*>> lines) {
  ProofDoc d;
  for (auto [formula, rule] : lines) d.lines.push_back({f(formula), rule});
  return d;
}

const std::string kCorpus = std::string(BPDL_SOURCE_DIR) + "/corpus/proofs";

}  // namespace

TEST_CASE("schema table") {
  const auto& all = schemata();
  CHECK(all.size() == 32);
  std::set<std::string> ids;
  for (const auto& s : all) CHECK(ids.insert(s.id).second);
  for (const char* id : {"SN1", "SN5", "K", "PDL-MIX", "IND", "IND-D", "INT1", "INT6", "CL1", "CL10"})
    CHECK(ids.contains(id));
  CHECK(find_schema("NOPE") == nullptr);
}

TEST_CASE("matching") {
  auto sub = match_schema(f("~~(p & q) <-> (p & q)"), schema("SN1"));
  REQUIRE(sub);
  CHECK(sub->formulas.at("phi") == f("p & q"));

  sub = match_schema(f("~[b]r <-> <b>~r"), schema("INT3"));
  REQUIRE(sub);
  CHECK(sub->formulas.at("phi") == f("r"));
  CHECK(sub->programs.at("alpha") == Program::atomic("b"));

  CHECK_FALSE(match_schema(f("p -> q"), schema("SN1")));
  // Metavariables must be bound consistently.
  CHECK_FALSE(match_schema(f("p -> (q -> q)"), schema("CL1")));
  // Programs and formulas are separate sorts.
  CHECK(match_schema(f("[a;b]p <-> [a][b]p"), schema("PDL-SEQ")));
  CHECK_FALSE(match_schema(f("[a;b]p <-> [b][a]p"), schema("PDL-SEQ")));
  // Sugar is expanded before matching.
  auto neg = match_schema(f("F -> !p"), schema("CL9"));
  REQUIRE(neg);
  CHECK(neg->formulas.at("phi") == f("p -> F"));
  CHECK(match_schema(f("(F -> F) <-> ~F"), schema("SN5")));
}

TEST_CASE("instantiation inverts matching") {
  Generator g(101);
  for (const auto& s : schemata())
    for (int i = 0; i < 20; ++i) {
      Formula inst = g.instance(s, 3, 2);
      auto sub = match_schema(inst, s);
      REQUIRE_MESSAGE(sub, s.id, ": ", to_string(inst));
      CHECK(instantiate(s.pattern, *sub) == inst);
    }
}

TEST_CASE("small proofs") {
  CHECK(check_proof(doc({{"p -> (q -> p)", "axiom:CL1"}, {"[a](p -> (q -> p))", "nec:1:a"}}))
            .accepted());

  CheckResult r =
      check_proof(doc({{"p -> (q -> p)", "axiom:CL1"}, {"<a>(p -> (q -> p))", "nec:1:a"}}));
  CHECK(r.status == CheckResult::Status::InvalidStep);
  CHECK(r.line == 2);

  CHECK(check_proof(doc({{"(p & q) -> p", "axiom:CL3"},
                         {"[a]((p & q) -> p)", "nec:1:a"},
                         {"[a]((p & q) -> p) -> ([a](p & q) -> [a]p)", "axiom:K"},
                         {"[a](p & q) -> [a]p", "mp:2,3"}}))
            .accepted());
}

TEST_CASE("malformed justifications are told apart from bad steps") {
  using S = CheckResult::Status;
  auto status = [](std::vector<std::pair<const char*, const char*>> lines) {
    return check_proof(doc(std::move(lines))).status;
  };
  CHECK(status({{"p", "axiom:XYZ"}}) == S::MalformedJustification);
  CHECK(status({{"p", "mp:1,1"}}) == S::MalformedJustification);
  CHECK(status({{"p -> (q -> p)", "axiom:CL1"}, {"[a](p -> (q -> p))", "nec:2:a"}}) ==
        S::MalformedJustification);
  CHECK(status({{"p -> (q -> p)", "axiom:CL1"}, {"[a](p -> (q -> p))", "nec:1:(a"}}) ==
        S::MalformedJustification);
  CHECK(status({{"p -> (q -> p)", "axiom:CL1"}, {"q", "mp:x,1"}}) == S::MalformedJustification);
  CHECK(status({{"p -> (q -> p)", "guess"}}) == S::MalformedJustification);
  CHECK(status({{"p -> (q -> p)", "mp:0,1"}}) == S::MalformedJustification);
  CHECK(status({{"p -> p", "axiom:CL1"}}) == S::InvalidStep);
  CHECK(status({{"p -> (q -> p)", "axiom:CL1"}, {"p", "axiom:CL3"}}) == S::InvalidStep);
  CHECK(status({{"p -> (q -> p)", "axiom:CL1"}, {"F -> p", "axiom:CL9"}, {"p", "mp:1,2"}}) ==
        S::InvalidStep);
  CheckResult r = check_proof(doc({{"p -> (q -> p)", "axiom:CL1"}, {"p -> p", "axiom:CL1"}}));
  CHECK(r.line == 2);
}

TEST_CASE("proof file loading") {
  ProofDoc d = load_proof(R"j({"lines": [{"formula": "p -> (q -> p)", "rule": "axiom:CL1"}]})j");
  CHECK(d.lines.size() == 1);
  CHECK_THROWS_AS(load_proof("[]"), FormatError);
  CHECK_THROWS_AS(load_proof(R"({"lines": [{"formula": "p"}]})"), FormatError);
  CHECK_THROWS_AS(load_proof(R"({"lines": [], "x": 1})"), FormatError);
  CHECK_THROWS_AS(load_proof(R"({"lines": [{"formula": "p &", "rule": "axiom:CL1"}]})"),
                  ParseError);
  CHECK_THROWS_AS(load_proof("{"), FormatError);
}

TEST_CASE("corpus is accepted and covers every schema and both rules") {
  auto corpus = bpdl::testing::load_proof_corpus(kCorpus);
  REQUIRE(corpus.size() >= 10);
  std::set<std::string> used;
  bool mp = false, nec = false;
  for (const auto& c : corpus) {
    CheckResult r = check_proof(c.doc);
    CHECK_MESSAGE(r.accepted(), c.name, " line ", r.line, ": ", r.reason);
    for (const auto& l : c.doc.lines) {
      if (l.rule.rfind("axiom:", 0) == 0) used.insert(l.rule.substr(6));
      mp = mp || l.rule.rfind("mp:", 0) == 0;
      nec = nec || l.rule.rfind("nec:", 0) == 0;
    }
  }
  for (const auto& s : schemata()) CHECK_MESSAGE(used.contains(s.id), s.id);
  CHECK(mp);
  CHECK(nec);
}

TEST_CASE("single-connective mutations of corpus proofs are rejected") {
  for (const auto& c : bpdl::testing::load_proof_corpus(kCorpus))
    for (std::size_t k = 0; k < c.doc.lines.size(); ++k)
      for (const auto& m : bpdl::testing::mutations(c.doc.lines[k].formula)) {
        ProofDoc d = c.doc;
        d.lines[k].formula = m;
        CHECK_MESSAGE(!check_proof(d).accepted(), c.name, " line ", k + 1, ": ", to_string(m));
      }
}

TEST_CASE("corpus conclusions hold in random models") {
  Generator g(103);
  for (const auto& c : bpdl::testing::load_proof_corpus(kCorpus))
    for (const auto& l : c.doc.lines)
      for (int i = 0; i < 30; ++i) CHECK_MESSAGE(valid_in_model(g.model(4), l.formula), c.name);
}
