// Parallel gather kernels against the serial scatter reference, per axis.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wavexfer/filters.hpp"
#include "wavexfer/kernels.hpp"

namespace {

using wavexfer::AxisLayout;

std::vector<double> random_buffer(std::size_t n) {
  std::mt19937_64 gen(42);
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

// A 12 x 768 x 768 module filtered along the axis picked by range(0).
AxisLayout layout_for(int axis) {
  switch (axis) {
    case 0:
      return {1, 12, 768 * 768};
    case 1:
      return {12, 768, 768};
    default:
      return {12 * 768, 768, 1};
  }
}

const wavexfer::FilterBank& bank_for(int index) {
  return wavexfer::get_filter_bank(wavexfer::kAllFamilies[static_cast<std::size_t>(index)]);
}

template <bool Parallel>
void BM_Analyze(benchmark::State& state) {
  const AxisLayout layout = layout_for(static_cast<int>(state.range(0)));
  const auto& bank = bank_for(static_cast<int>(state.range(1)));
  const auto in = random_buffer(layout.size());
  std::vector<double> low(layout.size() / 2), high(layout.size() / 2);
  for (auto _ : state) {
    if constexpr (Parallel) {
      wavexfer::analyze_axis_kernel(in, layout, bank, low, high);
    } else {
      wavexfer::reference::analyze_axis(in, layout, bank, low, high);
    }
    benchmark::DoNotOptimize(low.data());
    benchmark::DoNotOptimize(high.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * layout.size() * sizeof(double)));
  state.SetLabel(std::string(wavexfer::family_name(bank.family)));
}

template <bool Parallel>
void BM_Synthesize(benchmark::State& state) {
  const AxisLayout layout = layout_for(static_cast<int>(state.range(0)));
  const auto& bank = bank_for(static_cast<int>(state.range(1)));
  const AxisLayout band = layout.halved();
  const auto low = random_buffer(band.size());
  const auto high = random_buffer(band.size());
  std::vector<double> out(layout.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      wavexfer::synthesize_axis_kernel(low, high, band, bank, out);
    } else {
      wavexfer::reference::synthesize_axis(low, high, band, bank, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * layout.size() * sizeof(double)));
  state.SetLabel(std::string(wavexfer::family_name(bank.family)));
}

// Axes L, Din, Dout crossed with haar (index 0) and sym8 (index 3).
void Args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"axis", "family"});
  for (int axis : {0, 1, 2}) {
    for (int family : {0, 3}) b->Args({axis, family});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Analyze<false>)->Name("analyze/reference")->Apply(Args);
BENCHMARK(BM_Analyze<true>)->Name("analyze/openmp")->Apply(Args);
BENCHMARK(BM_Synthesize<false>)->Name("synthesize/reference")->Apply(Args);
BENCHMARK(BM_Synthesize<true>)->Name("synthesize/openmp")->Apply(Args);

BENCHMARK_MAIN();
