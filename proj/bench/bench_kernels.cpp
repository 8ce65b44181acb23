// Serial reference kernels against their OpenMP versions, plus one full
// time step. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "nlc/dynamics.hpp"
#include "nlc/initial.hpp"
#include "nlc/kernels.hpp"

using namespace nlc;
namespace omp = nlc::kernels::omp;
namespace serial = nlc::kernels::serial;

namespace {

struct Buffers {
  std::vector<std::vector<double>> in, grad, out;
  std::vector<cplx> modes, modes_out;
  Grid grid;

  Buffers(int dim, int n) : grid(make_grid(dim, n)) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    auto fill = [&](std::size_t count) {
      std::vector<std::vector<double>> a(count, std::vector<double>(grid.size()));
      for (auto& v : a)
        for (double& x : v) x = normal(rng);
      return a;
    };
    const auto d = static_cast<std::size_t>(dim);
    in = fill(d);
    grad = fill(d * d);
    out = fill(d * d);
    modes.resize(grid.spectral_size());
    for (auto& c : modes) c = cplx(normal(rng), normal(rng));
    modes_out.resize(modes.size());
  }

  static std::vector<std::span<const double>> cview(const std::vector<std::vector<double>>& a) {
    return {a.begin(), a.end()};
  }
  static std::vector<std::span<double>> view(std::vector<std::vector<double>>& a) { return {a.begin(), a.end()}; }
};

Buffers& buffers(int dim, int n) {
  static std::vector<std::unique_ptr<Buffers>> cache;
  for (auto& b : cache)
    if (b->grid.dim() == dim && b->grid.n() == n) return *b;
  cache.push_back(std::make_unique<Buffers>(dim, n));
  return *cache.back();
}

template <bool Parallel>
void gl_force(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const auto in = Buffers::cview(b.in);
  auto out = Buffers::view(b.out);
  out.resize(in.size());
  for (auto _ : st) {
    if constexpr (Parallel) omp::gl_force(in, 100.0, out);
    else serial::gl_force(in, 100.0, out);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.size()));
}

template <bool Parallel>
void lans_tensor(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const auto grad = Buffers::cview(b.grad);
  auto out = Buffers::view(b.out);
  for (auto _ : st) {
    if constexpr (Parallel) omp::lans_tensor(grad, b.grid.dim(), out);
    else serial::lans_tensor(grad, b.grid.dim(), out);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.size()));
}

template <bool Parallel>
void elastic_tensor(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const auto grad = Buffers::cview(b.grad);
  auto out = Buffers::view(b.out);
  for (auto _ : st) {
    if constexpr (Parallel) omp::elastic_tensor(grad, b.grid.dim(), out);
    else serial::elastic_tensor(grad, b.grid.dim(), out);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.size()));
}

template <bool Parallel>
void derivative(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    if constexpr (Parallel) omp::derivative(b.grid, 0, b.modes, b.modes_out);
    else serial::derivative(b.grid, 0, b.modes, b.modes_out);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.spectral_size()));
}

template <bool Parallel>
void spectral_inner(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    double s;
    if constexpr (Parallel) s = omp::spectral_inner(b.grid, b.modes, b.modes);
    else s = serial::spectral_inner(b.grid, b.modes, b.modes);
    benchmark::DoNotOptimize(s);
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.spectral_size()));
}

template <bool Parallel>
void sum_abs_pow(benchmark::State& st) {
  auto& b = buffers(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    double s;
    if constexpr (Parallel) s = omp::sum_abs_pow(b.in[0], 4.0);
    else s = serial::sum_abs_pow(b.in[0], 4.0);
    benchmark::DoNotOptimize(s);
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * b.grid.size()));
}

void full_step(benchmark::State& st) {
  const Grid g = make_grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  SimParams p;
  p.model = st.range(2) ? Model::lc_alpha : Model::lc;
  p.alpha = st.range(2) ? 0.3 : 0.0;
  SimState s = random_seeded(g, 1);
  for (auto _ : st) {
    s = step(s, p);
    benchmark::DoNotOptimize(s.u[0].values().data());
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({2, 256})->Args({3, 64})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(gl_force<false>)->Name("serial/gl_force")->Apply(sizes);
BENCHMARK(gl_force<true>)->Name("omp/gl_force")->Apply(sizes);
BENCHMARK(elastic_tensor<false>)->Name("serial/elastic_tensor")->Apply(sizes);
BENCHMARK(elastic_tensor<true>)->Name("omp/elastic_tensor")->Apply(sizes);
BENCHMARK(lans_tensor<false>)->Name("serial/lans_tensor")->Apply(sizes);
BENCHMARK(lans_tensor<true>)->Name("omp/lans_tensor")->Apply(sizes);
BENCHMARK(derivative<false>)->Name("serial/derivative")->Apply(sizes);
BENCHMARK(derivative<true>)->Name("omp/derivative")->Apply(sizes);
BENCHMARK(spectral_inner<false>)->Name("serial/spectral_inner")->Apply(sizes);
BENCHMARK(spectral_inner<true>)->Name("omp/spectral_inner")->Apply(sizes);
BENCHMARK(sum_abs_pow<false>)->Name("serial/sum_abs_pow")->Apply(sizes);
BENCHMARK(sum_abs_pow<true>)->Name("omp/sum_abs_pow")->Apply(sizes);
BENCHMARK(full_step)->Name("step")->Args({2, 128, 0})->Args({2, 128, 1})->Args({3, 32, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
