// Microbenchmarks for the conversion and yaw paths. Inputs cycle through a
// pregenerated pool so the RNG never sits inside the timed region.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "rotfuse/rotfuse.hpp"

using namespace rotfuse;

namespace {

constexpr std::size_t kPoolSize = 1024;  // power of two, indexed with a mask

std::vector<Quat> quat_pool() {
  std::mt19937_64 gen(7);
  std::vector<Quat> pool(kPoolSize);
  for (auto& q : pool) q = random_rotation(gen);
  return pool;
}

template <class Fn>
void run_over_pool(benchmark::State& state, Fn fn) {
  const auto pool = quat_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn(pool[i++ & (kPoolSize - 1)]));
  }
}

void BM_quat_to_rotmat(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return quat_to_rotmat(q); });
}
BENCHMARK(BM_quat_to_rotmat);

void BM_rotmat_to_quat(benchmark::State& state) {
  const auto pool = quat_pool();
  std::vector<RotMat> mats(kPoolSize);
  for (std::size_t k = 0; k < kPoolSize; ++k) mats[k] = quat_to_rotmat(pool[k]);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotmat_to_quat(mats[i++ & (kPoolSize - 1)]));
  }
}
BENCHMARK(BM_rotmat_to_quat);

void BM_quat_to_fused(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return quat_to_fused(q); });
}
BENCHMARK(BM_quat_to_fused);

void BM_fused_to_quat(benchmark::State& state) {
  const auto pool = quat_pool();
  std::vector<FusedAngles> fused(kPoolSize);
  for (std::size_t k = 0; k < kPoolSize; ++k) fused[k] = quat_to_fused(pool[k]);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fused_to_quat(fused[i++ & (kPoolSize - 1)]));
  }
}
BENCHMARK(BM_fused_to_quat);

void BM_quat_to_tilt(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return quat_to_tilt(q); });
}
BENCHMARK(BM_quat_to_tilt);

void BM_tilt_to_quat(benchmark::State& state) {
  const auto pool = quat_pool();
  std::vector<TiltAngles> tilts(kPoolSize);
  for (std::size_t k = 0; k < kPoolSize; ++k) tilts[k] = quat_to_tilt(pool[k]);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt_to_quat(tilts[i++ & (kPoolSize - 1)]));
  }
}
BENCHMARK(BM_tilt_to_quat);

void BM_quat_to_euler_zyx(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return quat_to_euler_zyx(q); });
}
BENCHMARK(BM_quat_to_euler_zyx);

void BM_fused_yaw_quat(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return fused_yaw(q); });
}
BENCHMARK(BM_fused_yaw_quat);

void BM_fused_yaw_rotmat(benchmark::State& state) {
  const auto pool = quat_pool();
  std::vector<RotMat> mats(kPoolSize);
  for (std::size_t k = 0; k < kPoolSize; ++k) mats[k] = quat_to_rotmat(pool[k]);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fused_yaw(mats[i++ & (kPoolSize - 1)]));
  }
}
BENCHMARK(BM_fused_yaw_rotmat);

void BM_remove_yaw(benchmark::State& state) {
  run_over_pool(state, [](const Quat& q) { return remove_yaw(q); });
}
BENCHMARK(BM_remove_yaw);

void BM_compose(benchmark::State& state) {
  const auto pool = quat_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    const Quat& a = pool[i & (kPoolSize - 1)];
    const Quat& b = pool[(i + 1) & (kPoolSize - 1)];
    ++i;
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_compose);

void BM_metric_dR(benchmark::State& state) {
  const auto pool = quat_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    const Quat& a = pool[i & (kPoolSize - 1)];
    const Quat& b = pool[(i + 1) & (kPoolSize - 1)];
    ++i;
    benchmark::DoNotOptimize(metric_dR(a, b));
  }
}
BENCHMARK(BM_metric_dR);

void BM_slerp(benchmark::State& state) {
  const auto pool = quat_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    const Quat& a = pool[i & (kPoolSize - 1)];
    const Quat& b = pool[(i + 1) & (kPoolSize - 1)];
    ++i;
    benchmark::DoNotOptimize(slerp(a, b, 0.37));
  }
}
BENCHMARK(BM_slerp);

void BM_random_rotation(benchmark::State& state) {
  std::mt19937_64 gen(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_rotation(gen));
  }
}
BENCHMARK(BM_random_rotation);

}  // namespace

BENCHMARK_MAIN();
