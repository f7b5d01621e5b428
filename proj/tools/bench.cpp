// Benchmark: serial update kernel vs the OpenMP kernel, direct stepping vs
// the confined residue stepper, and sweep throughput.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chipfire/laws.hpp"
#include "chipfire/sampling.hpp"
#include "chipfire/simulate.hpp"
#include "chipfire/staircase.hpp"
#include "chipfire/update.hpp"

using namespace chipfire;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_update_kernels(std::int64_t n, int steps) {
    ChipConfig base = slope2_config(n).add(n / 3);

    std::vector<std::int64_t> h(base.heights().begin(), base.heights().end());
    auto t0 = clock_type::now();
    std::int64_t sink = 0;
    for (int s = 0; s < steps; ++s) sink += update_step_serial(h);
    double serial = seconds_since(t0);

    h.assign(base.heights().begin(), base.heights().end());
    t0 = clock_type::now();
    for (int s = 0; s < steps; ++s) sink += update_step_parallel(h);
    double parallel = seconds_since(t0);

    std::printf("update kernel   n=%-8lld %6d steps   serial %8.3f ms   omp %8.3f ms   x%.2f\n",
                static_cast<long long>(n), steps, serial * 1e3, parallel * 1e3,
                serial / parallel);
    if (sink == -1) std::printf(" ");  // keep the loops alive
}

void bench_steppers(std::int64_t n) {
    // random confined states take hundreds of steps to close the cycle;
    // slope2 rows close almost immediately, so both loads are shown
    auto rng = trial_rng(1, 0);
    double direct = 0, residue = 0;
    for (int i = 0; i < 24; ++i) {
        ChipConfig c = random_confined(rng, n);
        SimulateOptions slow;
        slow.fast_confined_stepper = false;
        auto t0 = clock_type::now();
        auto a = simulate_to_cycle(c, slow);
        direct += seconds_since(t0);
        t0 = clock_type::now();
        auto b = simulate_to_cycle(c);
        residue += seconds_since(t0);
        if (!(a.activity == b.activity)) std::abort();
    }
    std::printf("cycle detection n=%-8lld (random confined)  direct %8.3f ms   residue %8.3f ms   x%.1f\n",
                static_cast<long long>(n), direct * 1e3, residue * 1e3, direct / residue);

    ChipConfig base = slope2_config(n);
    direct = residue = 0;
    for (std::int64_t k = 0; k <= n; k += std::max<std::int64_t>(1, n / 64)) {
        ChipConfig c = base.add(k);
        SimulateOptions slow;
        slow.fast_confined_stepper = false;
        auto t0 = clock_type::now();
        auto a = simulate_to_cycle(c, slow);
        direct += seconds_since(t0);
        t0 = clock_type::now();
        auto b = simulate_to_cycle(c);
        residue += seconds_since(t0);
        if (!(a.activity == b.activity)) std::abort();
    }
    std::printf("cycle detection n=%-8lld (slope2 rows)      direct %8.3f ms   residue %8.3f ms   x%.1f\n",
                static_cast<long long>(n), direct * 1e3, residue * 1e3, direct / residue);
}

void bench_sweep(std::int64_t n) {
    auto t0 = clock_type::now();
    PhaseDiagram d = phase_diagram(FamilySpec::by_name("slope2"), n);
    double dt = seconds_since(t0);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("phase diagram   n=%-8lld rows=%-6zu threads=%-3d %8.3f s\n",
                static_cast<long long>(n), d.rows.size(), threads, dt);
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 10000;
    int steps = argc > 2 ? std::atoi(argv[2]) : 256;

    bench_update_kernels(n, steps);
    bench_update_kernels(n * 4, steps / 4 + 1);
    bench_steppers(std::min<std::int64_t>(n, 2000));
    bench_sweep(std::min<std::int64_t>(n, 1000));
    bench_sweep(n);
    return 0;
}
