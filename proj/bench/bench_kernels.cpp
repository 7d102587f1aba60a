// Serial vs parallel kernels. With one hardware thread the parallel versions
// should only show their overhead; run on a wider machine to see the gain.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "plethysm/exactlinalg.hpp"
#include "plethysm/kernels.hpp"
#include "plethysm/ortho.hpp"

using namespace plethysm;

namespace {

struct Columns {
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> row;
  std::size_t per_col = 0;
};

const Columns& two_row_columns(int n) {
  static std::map<int, Columns> cache;
  auto [it, fresh] = cache.try_emplace(n);
  if (fresh) {
    const Partition shape = Partition::rectangle(2, n);
    for (const auto& v : enumerate_vertical(shape))
      for (const auto& b : v.blocks()) it->second.masks.push_back(b.bits());
    it->second.per_col = static_cast<std::size_t>(n);
    const auto rows = enumerate_horizontal(shape);
    for (const auto& b : rows.front().blocks()) it->second.row.push_back(b.bits());
  }
  return it->second;
}

template <Exec E>
void BM_IncidenceRow(benchmark::State& state) {
  const Columns& c = two_row_columns(static_cast<int>(state.range(0)));
  const kernels::FlatColumns cols{c.masks, c.per_col};
  std::vector<std::uint8_t> out(cols.count());
  for (auto _ : state) {
    kernels::incidence_row<kernels::AtMostOnce>(E, c.row, cols, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cols.count()));
}

template <Exec E>
void BM_SubMulMod(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  const std::uint64_t p = kDefaultPrimes[0];
  std::mt19937_64 rng(7);
  std::vector<std::uint64_t> target(len), basis(len);
  for (std::size_t i = 0; i < len; ++i) {
    target[i] = rng() % p;
    basis[i] = rng() % p;
  }
  for (auto _ : state) {
    kernels::sub_mul_mod(E, target, basis, 123456789, p, 0);
    benchmark::DoNotOptimize(target.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}

template <Exec E>
void BM_RankModP_K2xN(benchmark::State& state) {
  const Partition shape = Partition::rectangle(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const KRowStream rows(shape, {}, E);
    benchmark::DoNotOptimize(rank_mod_p(rows, kDefaultPrimes[0], E));
  }
}

}  // namespace

BENCHMARK(BM_IncidenceRow<Exec::serial>)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK(BM_IncidenceRow<Exec::parallel>)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK(BM_SubMulMod<Exec::serial>)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_SubMulMod<Exec::parallel>)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_RankModP_K2xN<Exec::serial>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModP_K2xN<Exec::parallel>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
