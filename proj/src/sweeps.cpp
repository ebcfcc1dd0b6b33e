#include "wolfpack/sweeps.hpp"

#include <algorithm>
#include <stdexcept>

#include "wolfpack/csvfmt.hpp"
#include "wolfpack/parallel.hpp"

namespace wolfpack::wec {

namespace {

int variable_index(const std::string& name) {
    if (name == "H") return 0;
    if (name == "T") return 1;
    if (name == "K") return 2;
    if (name == "C") return 3;
    throw std::invalid_argument("sweep variable must be one of H, T, K, C (got '" + name + "')");
}

}  // namespace

void GridSweepSpec::validate() const {
    const int v1 = variable_index(vary1);
    const int v2 = variable_index(vary2);
    if (v1 == v2) throw std::invalid_argument("GridSweepSpec: swept variables must differ");
    if (grid1.empty() || grid2.empty()) throw std::invalid_argument("GridSweepSpec: empty grid");
    for (std::size_t i = 1; i < grid1.size(); ++i)
        if (!(grid1[i] > grid1[i - 1]))
            throw std::invalid_argument("GridSweepSpec: grid1 must be ascending");
    for (std::size_t i = 1; i < grid2.size(); ++i)
        if (!(grid2[i] > grid2[i - 1]))
            throw std::invalid_argument("GridSweepSpec: grid2 must be ascending");
}

SweepResult sensitivity_grid(const GridSweepSpec& spec, const WecContext& ctx, int jobs) {
    spec.validate();
    const int v1 = variable_index(spec.vary1);
    const int v2 = variable_index(spec.vary2);
    const int n1 = static_cast<int>(spec.grid1.size());
    const int n2 = static_cast<int>(spec.grid2.size());

    SweepResult result;
    result.grid1 = spec.grid1;
    result.grid2 = spec.grid2;
    result.cells.resize(static_cast<std::size_t>(n1) * n2);

    parallel_cells(n1 * n2, jobs, [&](int idx) {
        const int i = idx / n2;
        const int j = idx % n2;
        double vars[4] = {spec.fixed_h, spec.fixed_t, spec.fixed_k, spec.fixed_c};
        vars[v1] = spec.grid1[static_cast<std::size_t>(i)];
        vars[v2] = spec.grid2[static_cast<std::size_t>(j)];
        SweepCell& cell = result.cells[static_cast<std::size_t>(idx)];
        try {
            const SimResult sim =
                simulate(ctx.body, ctx.coeffs, PtoParams::from_mega(vars[2], vars[3]),
                         RegularWave{vars[0], vars[1]}, ctx.sim);
            cell.power = sim.summary.mean_power;
            cell.feasible = feasibility_check(sim, ctx.theta_limit_deg).feasible;
        } catch (const SimulationError&) {
            cell.error = true;
        } catch (const std::domain_error&) {
            cell.error = true;
        }
    });

    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const SweepCell& cell = result.at(i, j);
            if (cell.error) continue;
            if (spec.mask_infeasible && !cell.feasible) continue;
            if (!result.best_cell ||
                cell.power > result.at(result.best_cell->first, result.best_cell->second).power)
                result.best_cell = {i, j};
        }
    }
    return result;
}

SweepResult power_matrix(const WecContext& ctx, const std::vector<double>& h_grid,
                         const std::vector<double>& t_grid, double k_mega, double c_mega,
                         int jobs) {
    GridSweepSpec spec;
    spec.vary1 = "H";
    spec.vary2 = "T";
    spec.grid1 = h_grid;
    spec.grid2 = t_grid;
    spec.fixed_k = k_mega;
    spec.fixed_c = c_mega;
    return sensitivity_grid(spec, ctx, jobs);
}

void write_grid_csv(const SweepResult& result, std::ostream& out) {
    out << "grid";
    for (double v : result.grid2) out << ',' << fmt_double(v);
    out << '\n';
    for (std::size_t i = 0; i < result.grid1.size(); ++i) {
        out << fmt_double(result.grid1[i]);
        for (std::size_t j = 0; j < result.grid2.size(); ++j) {
            const SweepCell& cell = result.at(static_cast<int>(i), static_cast<int>(j));
            if (cell.error || !cell.feasible)
                out << ",NA";
            else
                out << ',' << fmt_double(cell.power);
        }
        out << '\n';
    }
}

}  // namespace wolfpack::wec
