#include <omp.h>

#include <cstdio>
#include <memory>

#include "dcnet/amd.hpp"
#include "dcnet/enumerate.hpp"
#include "dcnet/scenario.hpp"
#include "dcnet/veto.hpp"

using namespace dcnet;

namespace {

void report(const char* name, double serial_s, double parallel_s, bool match) {
  std::printf("%-32s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              name, serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              match ? "outputs match" : "OUTPUTS DIFFER");
}

void bench_sweep() {
  Scenario sc =
      parse_scenario("protocol=veto n=5 s=30 inputs=0,1,0,0,0 trials=2000");
  TrialRunner runner = [&sc](int index, uint64_t seed) {
    return run_scenario_trial(sc, index, seed);
  };
  double t0 = omp_get_wtime();
  std::vector<TrialRecord> serial = run_trials(runner, sc.seed, sc.trials);
  double t1 = omp_get_wtime();
  std::vector<TrialRecord> parallel =
      run_trials_parallel(runner, sc.seed, sc.trials);
  double t2 = omp_get_wtime();
  report("veto sweep, 2000 trials", t1 - t0, t2 - t1, serial == parallel);
}

void bench_enumeration() {
  auto run = [](const std::shared_ptr<ChoiceLog>& log) {
    CorruptSet c;
    c.members = {3};
    RunContext ctx(3, c, TapeSet::exhaustive(3, log), Recording::View);
    run_veto({0, 1, 0, 0}, 1, ctx);
    return ctx.transcript().view_buffer();
  };
  double t0 = omp_get_wtime();
  ViewDistribution serial = enumerate_views(run);
  double t1 = omp_get_wtime();
  ViewDistribution parallel = enumerate_views_parallel(run);
  double t2 = omp_get_wtime();
  report("veto view enumeration, 2^21", t1 - t0, t2 - t1,
         same_distribution(serial, parallel));
}

void bench_amd_monte_carlo() {
  AmdParams params = amd_params(32, 10);
  int len = params.codeword_bits();
  BitString offset(static_cast<size_t>(len), 0);
  offset[0] = 1;
  offset[static_cast<size_t>(len) - 1] = 1;
  const int trials = 200000;

  auto accepted_at = [&](uint64_t seed) {
    RandomTape tape = RandomTape::seeded(seed);
    BitString w;
    tape.draw_bits(32, w);
    BitString cw = amd_encode(w, params, tape);
    for (int b = 0; b < len; ++b) cw[static_cast<size_t>(b)] ^= offset[static_cast<size_t>(b)];
    return amd_decode(cw, params).has_value() ? 1 : 0;
  };

  double t0 = omp_get_wtime();
  long serial = 0;
  for (int k = 0; k < trials; ++k) serial += accepted_at(static_cast<uint64_t>(k));
  double t1 = omp_get_wtime();
  long parallel = 0;
#pragma omp parallel for schedule(static) reduction(+ : parallel)
  for (int k = 0; k < trials; ++k)
    parallel += accepted_at(static_cast<uint64_t>(k));
  double t2 = omp_get_wtime();
  report("tamper monte carlo, 200000", t1 - t0, t2 - t1, serial == parallel);
}

}  // namespace

int main() {
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
  bench_sweep();
  bench_enumeration();
  bench_amd_monte_carlo();
  return 0;
}
