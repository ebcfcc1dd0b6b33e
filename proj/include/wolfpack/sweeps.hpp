#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wolfpack/wec_objective.hpp"

namespace wolfpack::wec {

// Two-parameter sweep over the decision variables {H, T, K, C}. Values are in
// user units (m, s, MN m/rad, MN s m/rad). The two fixed variables take the
// given constants.
struct GridSweepSpec {
    std::string vary1 = "K";
    std::string vary2 = "C";
    std::vector<double> grid1;
    std::vector<double> grid2;
    double fixed_h = 2.5;
    double fixed_t = 8.0;
    double fixed_k = 0.0;
    double fixed_c = 90.0;
    bool mask_infeasible = true;

    void validate() const;
};

struct SweepCell {
    double power = 0.0;   // mean post-ramp power [W]
    bool feasible = true;
    bool error = false;   // simulation failed; reported as NA
};

struct SweepResult {
    std::vector<double> grid1;  // rows
    std::vector<double> grid2;  // columns
    std::vector<SweepCell> cells;  // row-major
    std::optional<std::pair<int, int>> best_cell;  // best feasible (i, j), if any

    const SweepCell& at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * grid2.size() + static_cast<std::size_t>(j)];
    }
};

// Per-cell mean power with the flap-excursion mask. Cells are independent
// simulations; errors are confined to their cell. jobs as in parallel_cells.
SweepResult sensitivity_grid(const GridSweepSpec& spec, const WecContext& ctx, int jobs = 1);

// Power matrix over (H, T) at fixed PTO settings: rows follow the H grid,
// columns the T grid.
SweepResult power_matrix(const WecContext& ctx, const std::vector<double>& h_grid,
                         const std::vector<double>& t_grid, double k_mega, double c_mega,
                         int jobs = 1);

// First row = column grid, first column = row grid, body cells = mean power
// in W, masked/failed cells = NA.
void write_grid_csv(const SweepResult& result, std::ostream& out);

}  // namespace wolfpack::wec
