#include <benchmark/benchmark.h>

#include <array>
#include <cstring>
#include <string>
#include <vector>

#include "saferc/saferc.hpp"

namespace {

void BM_ParseDirectives(benchmark::State& state) {
  const std::string fmt = "id=%08lld name=[%-12.8s] ratio=%+.3f flags=%#x%%\n";
  for (auto _ : state) {
    auto items = saferc::parse_directives(fmt);
    benchmark::DoNotOptimize(items);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * fmt.size()));
}
BENCHMARK(BM_ParseDirectives);

void BM_ValidateFormatN(benchmark::State& state) {
  std::string fmt;
  for (int i = 0; i < state.range(0); ++i) fmt += "field %d: %s; ";
  for (auto _ : state) benchmark::DoNotOptimize(saferc::validate_format_n("printf_s", fmt));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * fmt.size()));
}
BENCHMARK(BM_ValidateFormatN)->Range(1, 256);

void BM_StrcpyS(benchmark::State& state) {
  const std::string src(static_cast<std::size_t>(state.range(0)), 'x');
  std::vector<char> dest(src.size() + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(saferc::strcpy_s(dest.data(), dest.size(), src.c_str()));
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_StrcpyS)->Range(8, 8 << 10);

void BM_StrcpyUnchecked(benchmark::State& state) {
  const std::string src(static_cast<std::size_t>(state.range(0)), 'x');
  std::vector<char> dest(src.size() + 1);
  for (auto _ : state) {
    std::strcpy(dest.data(), src.c_str());
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_StrcpyUnchecked)->Range(8, 8 << 10);

void BM_MemcpyS(benchmark::State& state) {
  const std::vector<char> src(static_cast<std::size_t>(state.range(0)), 'y');
  std::vector<char> dest(src.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(saferc::memcpy_s(dest.data(), dest.size(), src.data(), src.size()));
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_MemcpyS)->Range(8, 64 << 10);

void BM_SnprintfS(benchmark::State& state) {
  std::array<char, 128> buf{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(saferc::snprintf_s(buf.data(), buf.size(), "%s=%5d (%x)", "key", 4711, 255u));
  }
}
BENCHMARK(BM_SnprintfS);

void BM_HostSnprintf(benchmark::State& state) {
  std::array<char, 128> buf{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(std::snprintf(buf.data(), buf.size(), "%s=%5d (%x)", "key", 4711, 255u));
  }
}
BENCHMARK(BM_HostSnprintf);

int compare_ints(const void* x, const void* y, void*) {
  const int a = *static_cast<const int*>(x), b = *static_cast<const int*>(y);
  return (a > b) - (a < b);
}

void BM_QsortS(benchmark::State& state) {
  std::vector<int> base(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = static_cast<int>((i * 2654435761u) % 100003);
  std::vector<int> work;
  for (auto _ : state) {
    state.PauseTiming();
    work = base;
    state.ResumeTiming();
    saferc::qsort_s(work.data(), work.size(), sizeof(int), compare_ints, nullptr);
    benchmark::ClobberMemory();
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QsortS)->Range(16, 16 << 10)->Complexity(benchmark::oNLogN);

}  // namespace

BENCHMARK_MAIN();
