#include <doctest.h>

#include "bpdl/eval.hpp"
#include "bpdl/kernels.hpp"
#include "support/random.hpp"

using namespace bpdl;
using bpdl::testing::Generator;

namespace {

std::uint64_t mask_of(const StateSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
  return m;
}

struct Packed {
  std::vector<std::uint64_t> plus, minus, rows;
};

Packed pack(const Model& m, const MaskEvaluator& ev) {
  Packed p;
  for (const auto& a : ev.atoms()) {
    p.plus.push_back(mask_of(m.plus(a)));
    p.minus.push_back(mask_of(m.minus(a)));
  }
  for (const auto& a : ev.programs())
    for (std::size_t x = 0; x < m.size(); ++x) p.rows.push_back(mask_of(m.relation(a).successors(x)));
  return p;
}

}  // namespace

TEST_CASE("atomic preimage matches the reference") {
  Generator g(83);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + g.below(300), k = 1 + g.below(12);
    std::vector<Bitset> types(n, Bitset(k)), req(n, Bitset(k)), forb(n, Bitset(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (g.coin()) types[i].set(j);
        if (g.coin(0.15)) req[i].set(j);
        if (g.coin(0.15)) forb[i].set(j);
      }
    Bitset src(n), dst(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.coin(0.7)) src.set(i);
      if (g.coin(0.3)) dst.set(i);
    }
    const Bitset ref = atomic_preimage_reference(types, req, forb, src, dst);
    CHECK(atomic_preimage(types, req, forb, src, dst, ExecutionPolicy::Serial) == ref);
    CHECK(atomic_preimage(types, req, forb, src, dst, ExecutionPolicy::Parallel) == ref);
    CHECK(ref.is_subset_of(src));
  }
}

TEST_CASE("mask evaluator matches the session evaluator") {
  Generator g(89);
  for (int i = 0; i < 1500; ++i) {
    Model m = g.model(6);
    Formula phi = g.formula(4);
    MaskEvaluator ev(phi);
    Packed p = pack(m, ev);
    MaskEvaluator::Scratch sc;
    const std::uint64_t got = ev.supported({m.size(), p.plus, p.minus, p.rows}, sc);
    REQUIRE_MESSAGE(got == mask_of(truth_sets(m, phi).plus), to_string(phi));
  }
}

TEST_CASE("mask evaluator at the word boundary") {
  std::vector<std::string> names;
  for (int i = 0; i < 64; ++i) names.push_back("s" + std::to_string(i));
  Relation r(64);
  for (std::size_t i = 0; i + 1 < 64; ++i) r.insert(i, i + 1);
  StateSet last(64);
  last.set(63);
  Model m(names, {{"a", r}}, {{"p", last}}, {});
  Formula phi = parse_formula("<a*>p & [a*]<a*>p");
  MaskEvaluator ev(phi);
  Packed p = pack(m, ev);
  MaskEvaluator::Scratch sc;
  CHECK(ev.supported({64, p.plus, p.minus, p.rows}, sc) == ~std::uint64_t{0});
}

TEST_CASE("model enumeration: serial and parallel find the same first model") {
  Generator g(97, {{"p", "q"}, {"a"}});
  for (int i = 0; i < 40; ++i) {
    Formula phi = g.formula(3, 1);
    MaskEvaluator ev(phi);
    for (std::size_t n = 1; n <= 2; ++n) {
      if (ModelSpace{n, ev.atoms().size(), ev.programs().size()}.bits() > 20) continue;
      auto a = enumerate_models(ev, n, ExecutionPolicy::Serial);
      auto b = enumerate_models(ev, n, ExecutionPolicy::Parallel);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->index == b->index);
        CHECK(a->state == b->state);
      }
    }
  }
}

TEST_CASE("decode layout") {
  const ModelSpace sp{2, 1, 1};
  CHECK(sp.bits() == 8);
  std::vector<std::uint64_t> p, m, r;
  decode_model(sp, 0b10'01'10'01, p, m, r);
  CHECK(p == std::vector<std::uint64_t>{0b01});
  CHECK(m == std::vector<std::uint64_t>{0b10});
  CHECK(r == std::vector<std::uint64_t>{0b01, 0b10});
}

TEST_CASE("oversized spaces are refused") {
  MaskEvaluator ev(parse_formula("[a]p & [b]q & [c]r"));
  CHECK_THROWS_AS(enumerate_models(ev, 4, ExecutionPolicy::Serial), std::length_error);
}
