#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rmpc/channel.hpp"
#include "rmpc/fht.hpp"
#include "rmpc/product_code.hpp"
#include "rmpc/soft_fht.hpp"

namespace {

std::vector<double> gaussian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

void BM_Fht(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto v = gaussian(n, 1);
  for (auto _ : state) {
    rmpc::fht_in_place(v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fht)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_SoftFht(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto tables = rmpc::precompute_tables(m);
  rmpc::SoftFhtWorkspace ws(tables);
  const auto in = gaussian(tables.n, 2);
  std::vector<double> out(tables.n);
  for (auto _ : state) {
    rmpc::soft_fht_decode_into(in, out, tables, ws);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(tables.n));
}
BENCHMARK(BM_SoftFht)->DenseRange(4, 12, 2)->Complexity(benchmark::oNLogN);

void BM_ProductDecode(benchmark::State& state) {
  const int mt = static_cast<int>(state.range(0));
  const int m2 = mt / 2;
  const int m1 = mt - m2;
  const auto code = rmpc::parse_product_descriptor("rm(" + std::to_string(m1) + ",1)xrm(" +
                                                   std::to_string(m2) + ",1)");
  rmpc::ProductDecoder decoder(code);
  const auto y = gaussian(code.n(), 3);
  for (auto _ : state) {
    auto c = decoder.decode(y, 1.0, 3, rmpc::DecodeMode::kSoft);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(static_cast<std::int64_t>(code.n()));
}
BENCHMARK(BM_ProductDecode)->DenseRange(6, 14, 2)->Complexity(benchmark::oNLogN);

void BM_BruteForceSoftMap(benchmark::State& state) {
  const rmpc::Codebook book(rmpc::build_rm_code(3, 2));
  const auto in = gaussian(book.n(), 4);
  std::vector<double> out(book.n());
  std::vector<double> metrics(book.size());
  for (auto _ : state) {
    book.soft_map_coded_into(in, out, metrics);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BruteForceSoftMap);

}  // namespace

BENCHMARK_MAIN();
