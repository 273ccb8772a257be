#include <benchmark/benchmark.h>

#include <random>

#include "numhilbert/hilbert.hpp"
#include "numhilbert/kernels.hpp"
#include "numhilbert/macaulay.hpp"
#include "numhilbert/mourrain.hpp"
#include "numhilbert/parse.hpp"
#include "numhilbert/sylvester.hpp"

using namespace nh;
using kernels::Execution;

namespace {

const std::vector<std::string> kVars{"x1", "x2", "x3", "x4"};

std::vector<Polynomial<Complex>> cyclic4_local() {
  const LocalOrder o(4);
  const std::vector<Complex> p{-1.0, 1.0, 1.0, -1.0};
  std::vector<Polynomial<Complex>> out;
  for (const char* t : {"x1 + x2 + x3 + x4", "x1*x2 + x2*x3 + x3*x4 + x4*x1",
                        "x2*x3*x4 + x1*x3*x4 + x1*x2*x4 + x1*x2*x3", "x1*x2*x3*x4 - 1"})
    out.push_back(translate_to_origin<Complex>(parse_polynomial<Complex>(t, kVars, o), p).cleaned(1e-12));
  return out;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_AssembleSylvester(benchmark::State& state) {
  const auto gens = cyclic4_local();
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_array<Complex>(gens, d, exec_of(state)));
  label(state);
}
BENCHMARK(BM_AssembleSylvester)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);

void BM_InclusionExclusion(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> e(0, 6);
  std::vector<Monomial> corners;
  for (int k = 0; k < state.range(1); ++k) corners.push_back(Monomial{e(rng), e(rng), e(rng), e(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::inclusion_exclusion(corners, 4, 30, exec_of(state)));
  label(state);
}
BENCHMARK(BM_InclusionExclusion)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void BM_CommutationRows(benchmark::State& state) {
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  const auto r = static_cast<Eigen::Index>(state.range(1));
  std::vector<Eigen::MatrixXcd> mu;
  for (int i = 0; i < 4; ++i) {
    Eigen::MatrixXcd m(r, r / 2);
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      for (Eigen::Index b = 0; b < m.cols(); ++b) m(a, b) = Complex(g(rng), g(rng));
    mu.push_back(std::move(m));
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutation_rows(mu, exec_of(state)));
  label(state);
}
BENCHMARK(BM_CommutationRows)->ArgsProduct({{0, 1}, {64, 128}})->Unit(benchmark::kMillisecond);

void BM_MourrainHomogeneous(benchmark::State& state) {
  const auto gens = cyclic4_local();
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    MourrainSequence seq(gens, 1e-8, MourrainMode::homogeneous, exec_of(state));
    benchmark::DoNotOptimize(seq.advance_to(d));
  }
  label(state);
}
BENCHMARK(BM_MourrainHomogeneous)->ArgsProduct({{0, 1}, {6}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
