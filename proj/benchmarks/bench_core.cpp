#include <benchmark/benchmark.h>

#include "ffhyper/characters.hpp"
#include "ffhyper/charsum.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/greene.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/pg_series.hpp"

using namespace ffhyper;

namespace {

const FieldCtx& field_121() {
  static FieldCtx ctx = FieldCtx::make(11, 2);
  return ctx;
}

const FieldCtx& field_49() {
  static FieldCtx ctx = FieldCtx::make(7, 2);
  return ctx;
}

GParams quarter_params() {
  return {{mpq_class(1, 4), mpq_class(3, 4)}, {mpq_class(0), mpq_class(0)}};
}

}  // namespace

static void BM_FieldConstruction(benchmark::State& state) {
  for (auto _ : state) {
    FieldCtx ctx = FieldCtx::make(11, 2);
    benchmark::DoNotOptimize(ctx.gen());
  }
}
BENCHMARK(BM_FieldConstruction);

static void BM_FieldMul(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  uint32_t a = 5, b = 77;
  for (auto _ : state) {
    FqElem r = ctx.mul(FqElem{a}, FqElem{b});
    benchmark::DoNotOptimize(r);
    a = (a + 1) % 121;
    b = (b + 3) % 121;
  }
}
BENCHMARK(BM_FieldMul);

static void BM_JacobiSum(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  StdChars sc = std_chars(ctx);
  for (auto _ : state) {
    CycInt j = jacobi_sum(*sc.chi4, sc.phi);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_JacobiSum);

static void BM_GaussSum(benchmark::State& state) {
  const FieldCtx& ctx = field_49();  // ring order p(q-1) within budget
  StdChars sc = std_chars(ctx);
  for (auto _ : state) {
    CycInt g = gauss_sum(sc.phi);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GaussSum);

static void BM_GammaTableBuild(benchmark::State& state) {
  for (auto _ : state) {
    clear_gamma_cache();
    PadicInt g = gamma_p(mpq_class(1, 4), 61, 4);
    benchmark::DoNotOptimize(g.residue());
  }
}
BENCHMARK(BM_GammaTableBuild);

static void BM_PGEvaluation(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  GParams params = quarter_params();
  uint32_t N = default_precision(ctx);
  FqElem t = ctx.from_int(9);
  gamma_p(mpq_class(0), ctx.p(), N);  // warm the table
  for (auto _ : state) {
    GValue v = pG(params, ctx, t, N);
    benchmark::DoNotOptimize(v.valuation());
  }
}
BENCHMARK(BM_PGEvaluation);

static void BM_GreeneTableBuild(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  StdChars sc = std_chars(ctx);
  for (auto _ : state) {
    GreeneTable table(ctx, HypFParams{{*sc.chi4, sc.chi4->pow(3)}, {sc.eps}});
    benchmark::DoNotOptimize(&table);
  }
}
BENCHMARK(BM_GreeneTableBuild);

static void BM_GreeneEval(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  StdChars sc = std_chars(ctx);
  GreeneTable table(ctx, HypFParams{{*sc.chi4, sc.chi4->pow(3)}, {sc.eps}});
  uint32_t e = 1;
  for (auto _ : state) {
    CycRat v = table.eval(FqElem{e});
    benchmark::DoNotOptimize(&v);
    e = e % 120 + 1;
  }
}
BENCHMARK(BM_GreeneEval);

static void BM_CharsumOracle(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  uint32_t e = 1;
  for (auto _ : state) {
    int64_t v = phi_quadratic_sum(ctx, FqElem{e});
    benchmark::DoNotOptimize(v);
    e = e % 120 + 1;
  }
}
BENCHMARK(BM_CharsumOracle);

static void BM_Teichmuller(benchmark::State& state) {
  const FieldCtx& ctx = field_121();
  uint32_t e = 1;
  for (auto _ : state) {
    ZqElem w = teichmuller(ctx, FqElem{e}, 6);
    benchmark::DoNotOptimize(&w);
    e = e % 120 + 1;
  }
}
BENCHMARK(BM_Teichmuller);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
