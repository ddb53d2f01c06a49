#include <benchmark/benchmark.h>

#include <random>

#include "gpres/condition_r.hpp"
#include "gpres/construct.hpp"
#include "gpres/equations.hpp"
#include "gpres/solver.hpp"

using namespace gpres;

namespace {

  std::vector<Letter> random_letters(Alphabet const& ab, std::size_t n, unsigned seed) {
    std::mt19937        rng(seed);
    std::vector<Letter> out(n);
    for (auto& l : out) {
      l = Letter::from_code(static_cast<std::uint16_t>(rng() % ab.letter_count()));
    }
    return out;
  }

  GradedPresentation const& desk() {
    static GradedPresentation const p = build(Params{}, 4, ZPool::ball(1), BuildConfig{});
    return p;
  }

}  // namespace

static void BM_FreeReduce(benchmark::State& state) {
  Alphabet const ab(4);
  auto const     raw = random_letters(ab, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Word::reduce(raw));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FreeReduce)->RangeMultiplier(8)->Range(64, 1 << 18);

static void BM_CyclicReduce(benchmark::State& state) {
  Alphabet const ab(4);
  Word const     w = Word::reduce(random_letters(ab, static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_reduce(w));
  }
}
BENCHMARK(BM_CyclicReduce)->RangeMultiplier(8)->Range(64, 1 << 15);

static void BM_ConjugateFree(benchmark::State& state) {
  Alphabet const ab(4);
  Word const     x = Word::reduce(random_letters(ab, static_cast<std::size_t>(state.range(0)), 3));
  Word const     y = rotate(cyclic_reduce(x).core.word(), x.size() / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_conjugate_free(x, y));
  }
}
BENCHMARK(BM_ConjugateFree)->RangeMultiplier(8)->Range(64, 1 << 15);

// v(1) dies to the length cut without any search.
static void BM_LengthCutStar(benchmark::State& state) {
  auto const&  p = desk();
  Solver const solver(p, 4, SolverConfig::for_presentation(p));
  Word const   w = substitute(make_v(p.params()), Word{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.is_identity(w));
  }
}
BENCHMARK(BM_LengthCutStar)->Unit(benchmark::kMicrosecond);

// A relator conjugated by a random word: Dehn shortening has to find it.
static void BM_DehnRelatorConjugate(benchmark::State& state) {
  auto const&  p = desk();
  Solver const solver(p, 4, SolverConfig::for_presentation(p));
  Word const   z = Word::reduce(random_letters(p.alphabet(), 12, 4));
  Word const   w = concat({z, solver.core(static_cast<std::size_t>(state.range(0))), invert(z)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.dehn_reduce(w));
  }
}
BENCHMARK(BM_DehnRelatorConjugate)->Arg(0)->Arg(50)->Arg(103)->Unit(benchmark::kMicrosecond);

static void BM_BuildRank4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(Params{}, 4, ZPool::ball(static_cast<std::size_t>(state.range(0))),
                                   BuildConfig{}));
  }
}
BENCHMARK(BM_BuildRank4)->Arg(0)->Arg(1)->Iterations(1)->Unit(benchmark::kMillisecond);

static void BM_CheckRank4(benchmark::State& state) {
  auto const& p = desk();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_presentation(p, SolverConfig::for_presentation(p)));
  }
}
BENCHMARK(BM_CheckRank4)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
