// Timing comparison between the OpenMP kernels and the serial reference
// paths: gate pipeline of the truncated-space oracle, wavefunction grid
// reconstruction, and a closed-form sweep table.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "tdsts/analytic.hpp"
#include "tdsts/kernels.hpp"
#include "tdsts/oracle.hpp"

using namespace tdsts;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

StateSpec bench_spec() {
    StateSpec s;
    s.alpha = {0.5, 0.3};
    s.z = {0.7, std::numbers::pi / 3.0};
    s.thermal.input_temps = {0.8};
    s.thermal.detector_temps = {0.5};
    return s;
}

template <class F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now_seconds();
        fn();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-38s %10.4f s %10.4f s %8.2fx\n", name, serial, parallel,
                serial / parallel);
}

double fock_pipeline(int cutoff, bool parallel) {
    const auto spec = bench_spec();
    return time_best_of(3, [&] {
        (void)oracle::fock_tfd_state(spec, 0.9, cutoff, cutoff + 1 + cutoff / 2,
                                     parallel);
    });
}

double grid_fill(int n, bool parallel) {
    const auto spec = bench_spec();
    const double t = 0.9;
    const auto m = xp_moments(spec, t);
    const double sx = std::sqrt(m.var_x);
    std::vector<Complex> out(static_cast<std::size_t>(n) * n);
    auto body = [&](std::ptrdiff_t idx) {
        const int i = static_cast<int>(idx / n);
        const int j = static_cast<int>(idx % n);
        const double x = m.mean_x + sx * (-4.0 + 8.0 * i / (n - 1.0));
        const double xt = m.mean_x + sx * (-4.0 + 8.0 * j / (n - 1.0));
        out[static_cast<std::size_t>(idx)] = wavefunction(spec, x, xt, t);
    };
    return time_best_of(3, [&] {
        const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(n) * n;
        if (parallel) {
            kernels::parallel_for(total, body);
        } else {
            for (std::ptrdiff_t i = 0; i < total; ++i) body(i);
        }
    });
}

double sweep_table(int rows, bool parallel) {
    const auto base = bench_spec();
    std::vector<double> sink(static_cast<std::size_t>(rows));
    auto body = [&](std::ptrdiff_t i) {
        StateSpec spec = base;
        spec.z.r = 1.5 * static_cast<double>(i) / rows;
        const double t = 12.0 * static_cast<double>(i) / rows;
        const auto m = xp_moments(spec, t);
        sink[static_cast<std::size_t>(i)] =
            m.var_x + entropy_sum(spec, t) + uncertainty_product(spec, t);
    };
    return time_best_of(3, [&] {
        if (parallel) {
            kernels::parallel_for(rows, body);
        } else {
            for (std::ptrdiff_t i = 0; i < rows; ++i) body(i);
        }
    });
}

}  // namespace

int main() {
    std::printf("openmp: %s, max threads: %d\n",
                kernels::openmp_enabled() ? "on" : "off", kernels::max_threads());
    std::printf("%-38s %12s %12s %9s\n", "benchmark", "serial", "parallel", "speedup");

    report("fock gate pipeline, cutoff 96", fock_pipeline(96, false),
           fock_pipeline(96, true));
    report("fock gate pipeline, cutoff 160", fock_pipeline(160, false),
           fock_pipeline(160, true));
    report("wavefunction grid 256x256", grid_fill(256, false), grid_fill(256, true));
    report("closed-form sweep, 200k rows", sweep_table(200000, false),
           sweep_table(200000, true));
    return 0;
}
