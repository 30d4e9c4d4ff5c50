// Serial against OpenMP versions of the two data-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "bpdl/kernels.hpp"

using namespace bpdl;

namespace {

struct PreimageInput {
  std::vector<Bitset> types, req, forb;
  Bitset src, dst;
};

PreimageInput make_preimage(std::size_t n, std::size_t k) {
  std::mt19937_64 rng(42);
  std::bernoulli_distribution half(0.5), sparse(0.1);
  PreimageInput in{std::vector<Bitset>(n, Bitset(k)), std::vector<Bitset>(n, Bitset(k)),
                   std::vector<Bitset>(n, Bitset(k)), Bitset(n), Bitset(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (half(rng)) in.types[i].set(j);
      if (sparse(rng)) in.req[i].set(j);
      if (sparse(rng)) in.forb[i].set(j);
    }
    in.src.set(i);
    if (sparse(rng)) in.dst.set(i);
  }
  return in;
}

void preimage(benchmark::State& state, ExecutionPolicy policy) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PreimageInput in = make_preimage(n, 24);
  for (auto _ : state)
    benchmark::DoNotOptimize(atomic_preimage(in.types, in.req, in.forb, in.src, in.dst, policy));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void enumeration(benchmark::State& state, ExecutionPolicy policy) {
  // Unsatisfiable, so the whole space is scanned.
  const MaskEvaluator ev(parse_formula("<a*>(p & ~q) & [a*]!(p & ~q)"));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_models(ev, n, policy));
  const ModelSpace sp{n, ev.atoms().size(), ev.programs().size()};
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << sp.bits()));
}

}  // namespace

BENCHMARK_CAPTURE(preimage, serial, ExecutionPolicy::Serial)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK_CAPTURE(preimage, parallel, ExecutionPolicy::Parallel)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK_CAPTURE(enumeration, serial, ExecutionPolicy::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(enumeration, parallel, ExecutionPolicy::Parallel)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
