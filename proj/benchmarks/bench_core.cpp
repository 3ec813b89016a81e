#include <benchmark/benchmark.h>

#include "modpll/verify.hpp"

using namespace modpll;

namespace {

struct Q7 {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel group = AbelianGroupModel::standard_model(3, 7, 1);
};

}  // namespace

static void BM_DvrMul(benchmark::State& state) {
  FiniteFieldCtx f5 = FiniteFieldCtx::prime_field(5);
  DVRCtx ring(f5, static_cast<int>(state.range(0)));
  DVRElem a = dvr_from_ints(ring, {1, 2, 3, 4, 1});
  DVRElem b = dvr_from_ints(ring, {2, 0, 1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dvr_mul(a, b));
  }
}
BENCHMARK(BM_DvrMul)->Arg(5)->Arg(6)->Arg(8);

static void BM_DvrUnitInv(benchmark::State& state) {
  FiniteFieldCtx f5 = FiniteFieldCtx::prime_field(5);
  DVRCtx ring(f5, 6);
  DVRElem a = dvr_from_ints(ring, {2, 2, 3, 0, 1, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dvr_unit_inv(a));
  }
}
BENCHMARK(BM_DvrUnitInv);

static void BM_SigmaClass(benchmark::State& state) {
  Q7 m;
  DVRCtx ring(m.field, 5);
  UnitCharacter chi = make_unit_character(
      m.group, ring, {dvr_from_ints(ring, {1, 1, 2}), dvr_from_ints(ring, {1, 0, 1})});
  UnitCharacter triv = trivial_character(m.group, ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_class(chi, triv));
  }
}
BENCHMARK(BM_SigmaClass);

static void BM_VerifyPropClass(benchmark::State& state) {
  Q7 m;
  DVRCtx ring(m.field, 5);
  UnitCharacter chi = make_unit_character(
      m.group, ring, {dvr_from_ints(ring, {1, 1}), dvr_one(ring)});
  DiagonalActionModule mod(chi, trivial_character(m.group, ring));
  int window = static_cast<int>(state.range(0));
  std::vector<LatticeBasis> candidates = canonical_window_candidates(ring, window);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_prop_class(mod, window, &candidates));
  }
}
BENCHMARK(BM_VerifyPropClass)->Arg(1)->Arg(2);

static void BM_BruteForceCorrespond(benchmark::State& state) {
  Q7 m;
  DVRCtx ring(m.field, 3);
  ResidualHom sigma(m.group, {ff_from_int(m.field, 0), ff_from_int(m.field, 1)});
  ResidualGaloisRep rep = ResidualGaloisRep::trivial_ss_qp1(
      m.group, m.field, sigma, ResidualCharacter::trivial(m.group, m.field));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_correspond(rep, ring, SearchSpec{}));
  }
}
BENCHMARK(BM_BruteForceCorrespond);

static void BM_Prop31CharacterSweepUnit(benchmark::State& state) {
  // one character's worth of the big sweep: module build plus the full
  // window-2 candidate scan
  Q7 m;
  DVRCtx ring(m.field, 5);
  std::vector<LatticeBasis> candidates = canonical_window_candidates(ring, 2);
  UnitCharacter triv = trivial_character(m.group, ring);
  UnitCharacter chi = make_unit_character(
      m.group, ring, {dvr_from_ints(ring, {1, 1}), dvr_from_ints(ring, {1, 0, 2})});
  for (auto _ : state) {
    DiagonalActionModule mod(chi, triv);
    benchmark::DoNotOptimize(verify_prop_class(mod, 2, &candidates));
  }
}
BENCHMARK(BM_Prop31CharacterSweepUnit);

BENCHMARK_MAIN();
