// Compares the serial reference path (jobs = 1) against the OpenMP path
// (jobs = 0) for the two cell-parallel kernels: the repeated-trial benchmark
// grid and the simulation sweep. Verifies that both paths produce identical
// results before reporting timings.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "wolfpack/csvfmt.hpp"
#include "wolfpack/parallel.hpp"
#include "wolfpack/stats.hpp"
#include "wolfpack/sweeps.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool same_tables(const wolfpack::stats::ResultTable& a, const wolfpack::stats::ResultTable& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].raw != b.cells[i].raw) return false;
    }
    return true;
}

bool same_sweeps(const wolfpack::wec::SweepResult& a, const wolfpack::wec::SweepResult& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].power != b.cells[i].power || a.cells[i].feasible != b.cells[i].feasible ||
            a.cells[i].error != b.cells[i].error)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

    std::printf("threads available: %d\n", wolfpack::hardware_jobs());

    // Kernel 1: benchmark experiment grid.
    wolfpack::stats::ExperimentGrid grid;
    grid.algorithms = wolfpack::stats::default_algorithms();
    grid.functions = quick ? std::vector<std::string>{"F9", "F11"}
                           : std::vector<std::string>{"F2", "F3", "F9", "F11", "F14", "F16"};
    grid.repeats = quick ? 3 : 10;
    grid.population = 20;
    grid.max_iter = quick ? 60 : 300;
    grid.base_seed = 42;

    auto t0 = Clock::now();
    const auto serial_table = wolfpack::stats::run_experiment(grid, 1);
    const double grid_serial = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel_table = wolfpack::stats::run_experiment(grid, 0);
    const double grid_parallel = seconds_since(t0);
    if (!same_tables(serial_table, parallel_table)) {
        std::printf("FAIL: parallel experiment grid differs from serial reference\n");
        return 1;
    }
    std::printf("experiment grid   serial %.3fs  openmp %.3fs  speedup %.2fx  (identical: yes)\n",
                grid_serial, grid_parallel, grid_serial / grid_parallel);

    // Kernel 2: (K, C) sensitivity sweep.
    wolfpack::wec::WecContext ctx = wolfpack::wec::default_context();
    if (quick) {
        ctx.sim.t_end = 60.0;
        ctx.sim.ramp = 15.0;
        ctx.sim.memory = 10.0;
    }
    wolfpack::wec::GridSweepSpec spec;
    spec.grid1 = wolfpack::linspace(0.0, 100.0, quick ? 6 : 16);
    spec.grid2 = wolfpack::linspace(0.01, 200.0, quick ? 6 : 16);
    spec.fixed_h = 2.5;
    spec.fixed_t = 8.0;

    t0 = Clock::now();
    const auto serial_sweep = wolfpack::wec::sensitivity_grid(spec, ctx, 1);
    const double sweep_serial = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel_sweep = wolfpack::wec::sensitivity_grid(spec, ctx, 0);
    const double sweep_parallel = seconds_since(t0);
    if (!same_sweeps(serial_sweep, parallel_sweep)) {
        std::printf("FAIL: parallel sweep differs from serial reference\n");
        return 1;
    }
    std::printf("sensitivity sweep serial %.3fs  openmp %.3fs  speedup %.2fx  (identical: yes)\n",
                sweep_serial, sweep_parallel, sweep_serial / sweep_parallel);
    return 0;
}
