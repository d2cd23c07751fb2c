#include <benchmark/benchmark.h>

#include <random>

#include "holonomy/characters.hpp"
#include "holonomy/cohomology.hpp"
#include "holonomy/groups.hpp"
#include "holonomy/intmat.hpp"
#include "holonomy/lattices.hpp"

namespace {

holo::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  holo::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

void bm_smith(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto snf = holo::smith_normal_form(random_matrix(n, seed++));
    benchmark::DoNotOptimize(snf.D);
  }
}
BENCHMARK(bm_smith)->Arg(4)->Arg(6)->Arg(8);

void bm_h2_klein_rank3(benchmark::State& state) {
  holo::GroupPtr g = holo::enumerate_elements(holo::klein_four_matrix_spec());
  std::vector<holo::IntMatrix> action{
      holo::IntMatrix::diagonal({1, -1, -1}),
      holo::IntMatrix::diagonal({-1, 1, -1})};
  holo::GLattice l(g, 3, action);
  for (auto _ : state) {
    holo::H2Group h = holo::h2(l);
    benchmark::DoNotOptimize(h.order());
  }
}
BENCHMARK(bm_h2_klein_rank3);

void bm_character_table_s3(benchmark::State& state) {
  holo::GroupPtr g = holo::enumerate_elements(holo::symmetric3_spec());
  for (auto _ : state) {
    auto t = holo::character_table(g);
    benchmark::DoNotOptimize(t.rows);
  }
}
BENCHMARK(bm_character_table_s3);

}  // namespace

BENCHMARK_MAIN();
