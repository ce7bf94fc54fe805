#include <benchmark/benchmark.h>

#include "cca/builtin.hpp"
#include "cca/groebner.hpp"
#include "cca/homology.hpp"
#include "cca/segre.hpp"
#include "cca/simplicial.hpp"

using namespace cca;

static void BM_buchberger_builtin(benchmark::State& state) {
  SegreContext ctx = builtin::cubic_segre_context();
  Ideal ideal = builtin::cubic_segre_ideal(ctx);
  for (auto _ : state) {
    GroebnerBasis basis = buchberger(ideal, ctx.order_p);
    benchmark::DoNotOptimize(basis.members);
  }
}
BENCHMARK(BM_buchberger_builtin);

static void BM_betti_projective_plane_q(benchmark::State& state) {
  SimplicialComplex rp2 = builtin::projective_plane();
  Field q = Field::rationals();
  for (auto _ : state) {
    BettiVector betti = reduced_betti(rp2, q);
    benchmark::DoNotOptimize(betti.entries);
  }
}
BENCHMARK(BM_betti_projective_plane_q);

static void BM_betti_projective_plane_f2(benchmark::State& state) {
  SimplicialComplex rp2 = builtin::projective_plane();
  Field f2 = Field::prime(2);
  for (auto _ : state) {
    BettiVector betti = reduced_betti(rp2, f2);
    benchmark::DoNotOptimize(betti.entries);
  }
}
BENCHMARK(BM_betti_projective_plane_f2);

static void BM_depth_builtin_complex(benchmark::State& state) {
  SegreContext ctx = builtin::cubic_segre_context();
  SimplicialComplex delta = from_stanley_reisner(
      builtin::cubic_segre_initial_monomials(ctx), ctx.ring_p);
  Field q = Field::rationals();
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_sr(delta, q));
  }
}
BENCHMARK(BM_depth_builtin_complex);

static void BM_segre_verification(benchmark::State& state) {
  SegreContext ctx = segre_ring(2, 2);
  std::vector<Monomial> u = {Monomial{{1, 1, 0}}, Monomial{{0, 1, 1}}};
  std::vector<Monomial> v = {Monomial{{1, 0, 1}}};
  for (auto _ : state) {
    SegreVerification result = verify_segre_proposition(ctx, u, v);
    benchmark::DoNotOptimize(result.generators_match);
  }
}
BENCHMARK(BM_segre_verification);

BENCHMARK_MAIN();
