#include <benchmark/benchmark.h>

#include <copfaces/copfaces.hpp>

namespace {

using namespace copfaces;

SymMatrix horn() {
  return SymMatrix::from_rows({{1, -1, 1, 1, -1},
                               {-1, 1, -1, 1, 1},
                               {1, -1, 1, -1, 1},
                               {1, 1, -1, 1, -1},
                               {-1, 1, 1, -1, 1}});
}

SimplexVector point(std::initializer_list<const char*> coords) {
  Vector v;
  for (const char* c : coords) v.push_back(parse_scalar(c));
  return SimplexVector(std::move(v));
}

void BM_MinQuadHorn(benchmark::State& state) {
  const SymMatrix h = horn();
  for (auto _ : state) benchmark::DoNotOptimize(min_quad_over_simplex(h));
}
BENCHMARK(BM_MinQuadHorn)->Unit(benchmark::kMillisecond);

void BM_MinimalZerosRandom(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(5);
  SymMatrix d(p);
  for (int i = 0; i < p; ++i) {
    Vector b(static_cast<std::size_t>(p));
    for (auto& x : b) x = random_rational(rng, 2, 2);
    d += SymMatrix::outer(b);
  }
  for (auto _ : state) benchmark::DoNotOptimize(minimal_zeros_of_matrix(d));
}
BENCHMARK(BM_MinimalZerosRandom)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CanonicalizeNestedFace(benchmark::State& state) {
  const FaceSpec f = FaceSpec::exposed(3, {point({"1/2", "1/2", "0"}), point({"1/4", "1/4", "1/2"})});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_face(f));
}
BENCHMARK(BM_CanonicalizeNestedFace)->Unit(benchmark::kMillisecond);

void BM_OmegaGrid(benchmark::State& state) {
  const VectorFamily v({point({"1/2", "1/2", "0", "0"}), point({"0", "0", "1/3", "2/3"})});
  const int den = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omega_grid(v, den));
}
BENCHMARK(BM_OmegaGrid)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

LinearCopProblem pinned_problem() {
  // A(x) = A0 + x1 A1 + x2 A2 with a zero at e1 that no x can move.
  const auto a0 = SymMatrix::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto a1 = SymMatrix::from_rows({{0, 0, 0}, {0, 1, -1}, {0, -1, 1}});
  const auto a2 = SymMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  return LinearCopProblem({1, 0}, {a0, a1, a2});
}

void BM_FindImmobileZeros(benchmark::State& state) {
  const auto prob = pinned_problem();
  for (auto _ : state) benchmark::DoNotOptimize(find_immobile_zeros(prob));
}
BENCHMARK(BM_FindImmobileZeros)->Unit(benchmark::kMillisecond);

void BM_SolveRegularized(benchmark::State& state) {
  const auto prob = pinned_problem();
  const auto reg = regularize(prob, find_immobile_zeros(prob));
  for (auto _ : state) benchmark::DoNotOptimize(solve_discretized(reg));
}
BENCHMARK(BM_SolveRegularized)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
