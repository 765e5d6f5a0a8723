#include <benchmark/benchmark.h>

#include "renorm/classify.hpp"
#include "renorm/corpus.hpp"
#include "renorm/linear_form.hpp"
#include "renorm/synth.hpp"

using namespace renorm;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

std::shared_ptr<const HopfAlgebra> algebra(int grade) {
  return HopfAlgebra::build(builtin_corpus().graphs, grade);
}

void BM_Classify(benchmark::State& state) {
  const auto h = algebra(3);
  std::vector<FeynmanGraph> graphs;
  for (const auto& g : h->generators()) graphs.push_back(g.graph);
  const auto scheme = SubtractionScheme::taylor(DegreeFunction::minimal());
  for (auto _ : state) benchmark::DoNotOptimize(classify_scheme(scheme, graphs, 100, 1, mode(state)));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}

void BM_GeneralConvolution(benchmark::State& state) {
  const auto h = algebra(static_cast<int>(state.range(1)));
  const BoundScheme bs(SubtractionScheme::taylor(DegreeFunction::minimal()), h);
  const LinearForm a = random_character(bs, 1).as_general();
  const LinearForm b = random_character(bs, 2).as_general();
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b, mode(state)));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
  state.counters["forests"] = static_cast<double>(h->forests().size());
}

void BM_ExpStar(benchmark::State& state) {
  const auto h = algebra(3);
  const BoundScheme bs(SubtractionScheme::pole(), h);
  const LinearForm mu = random_infinitesimal(bs, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exp_star(mu, mode(state)));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}

}  // namespace

BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralConvolution)->Args({0, 3})->Args({1, 3})->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpStar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
