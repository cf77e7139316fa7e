#include "torcob/equivariant.hpp"
#include "torcob/fanlib.hpp"
#include "torcob/ordinary.hpp"

#include <benchmark/benchmark.h>

using namespace torcob;

namespace {

GradedSeries dense_series(const CoeffRing& ring, int nvars, int pb) {
  std::vector<std::string> vars;
  for (int i = 0; i < nvars; ++i) vars.push_back("t" + std::to_string(i + 1));
  GradedSeries s(ring, vars, pb);
  std::vector<int> exps(nvars, 0);
  for (int i = 0; i < nvars; ++i) {
    exps.assign(nvars, 0);
    exps[i] = 1;
    Coeff c = Coeff::scalar(i + 1);
    for (int g = 0; g < ring.num_gens() && g < 2; ++g)
      c += Coeff::gen(g).scaled(Rat(i - 1));
    s.add_term(exps, c);
  }
  return s;
}

void BM_series_mul(benchmark::State& state) {
  CoeffRing ring(CoeffKind::universal_rational, 3);
  GradedSeries a = dense_series(ring, 4, 5);
  GradedSeries b = a + a * a;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul);

void BM_series_substitute(benchmark::State& state) {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 6);
  GradedSeries u = GradedSeries::variable(law.ring(), {"u", "v"}, 6, 0);
  GradedSeries v = GradedSeries::variable(law.ring(), {"u", "v"}, 6, 1);
  GradedSeries arg = u + v + u * v;
  for (auto _ : state)
    benchmark::DoNotOptimize(law.series().substituted({arg, v}));
}
BENCHMARK(BM_series_substitute);

void BM_universal_law_build(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        FormalGroupLaw::make(CoeffKind::universal_rational, 4, 6));
}
BENCHMARK(BM_universal_law_build);

void BM_universal_n_series(benchmark::State& state) {
  for (auto _ : state) {
    FormalGroupLaw law =
        FormalGroupLaw::make(CoeffKind::universal_rational, 3, 6);
    benchmark::DoNotOptimize(law.n_series(5));
  }
}
BENCHMARK(BM_universal_n_series);

void BM_presentation_p3(benchmark::State& state) {
  Fan fan = builtin_fan("p3");
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(Presentation::build(fan, law));
}
BENCHMARK(BM_presentation_p3);

void BM_completion_f2(benchmark::State& state) {
  Fan fan = builtin_fan("f2");
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 3);
  Presentation e = Presentation::build(fan, law).eliminated_at(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ReductionSystem::complete(e));
}
BENCHMARK(BM_completion_f2);

void BM_graded_rank_p3(benchmark::State& state) {
  Fan fan = builtin_fan("p3");
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 4);
  Presentation p = Presentation::build(fan, law);
  for (auto _ : state) benchmark::DoNotOptimize(p.graded_rank_info(2));
}
BENCHMARK(BM_graded_rank_p3);

void BM_piecewise_rank_p2(benchmark::State& state) {
  Fan fan = builtin_fan("p2");
  EquivariantModel model(
      fan, FormalGroupLaw::make(CoeffKind::universal_rational, 2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(model.graded_rank_pp(2));
}
BENCHMARK(BM_piecewise_rank_p2);

void BM_normal_form_p3(benchmark::State& state) {
  Fan fan = builtin_fan("p3");
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 4);
  ReductionSystem rs =
      ReductionSystem::complete(Presentation::build(fan, law).eliminated_at(0));
  GradedSeries probe = dense_series(law.ring(), 4, 4);
  GradedSeries cube = probe * probe * probe;
  for (auto _ : state) benchmark::DoNotOptimize(rs.normal_form(cube));
}
BENCHMARK(BM_normal_form_p3);

}  // namespace

BENCHMARK_MAIN();
