#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wolfpack/benchmarks.hpp"
#include "wolfpack/optimizer.hpp"

#include "json.hpp"

namespace wolfpack::stats {

// A named algorithm: update-rule spec plus the optional hill-climb stage.
struct AlgorithmSpec {
    std::string name;
    VariantSpec variant;
    std::optional<HcConfig> hybrid;
};

// Builds the spec for a CLI name ("gwo", ..., "hc-egwo" with default HcConfig).
AlgorithmSpec make_algorithm(const std::string& name);

// The six algorithms compared throughout: gwo, mgwo, eegwo, igwo, ergwo, hc-egwo.
std::vector<AlgorithmSpec> default_algorithms();

// Repeated-trial grid: every (algorithm, function) cell is run `repeats`
// times with seeds base_seed + k. Cells are independent, so the runner may
// execute them concurrently; assembly is by index and never depends on
// completion order.
struct ExperimentGrid {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::string> functions;  // benchmark ids
    int repeats = 30;
    std::uint64_t base_seed = 42;
    int population = 30;
    int max_iter = 500;

    void validate() const;
};

struct CellStats {
    std::string algorithm;
    std::string function;
    double mean = 0.0;
    double stddev = 0.0;            // sample standard deviation (divisor repeats-1)
    std::vector<double> raw;        // best fitness of each repeat, seed order
};

struct ResultTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> functions;
    Direction direction = Direction::Minimize;
    std::vector<CellStats> cells;  // function-major, algorithm-minor

    const CellStats& cell(const std::string& algorithm, const std::string& function) const;
};

ResultTable run_experiment(const ExperimentGrid& grid, int jobs = 1);

struct FriedmanResult {
    std::map<std::string, double> average_ranks;  // rank 1 = best
    double statistic = 0.0;                       // chi-squared Friedman statistic
    int n_functions = 0;
    int k_algorithms = 0;
    std::vector<std::string> excluded;  // functions dropped for NaN means
};

// Ranks algorithms per function by cell mean (ties get mid-ranks), averages
// across functions and forms chi2 = 12n/(k(k+1)) sum R_j^2 - 3n(k+1).
FriedmanResult friedman_ranks(const ResultTable& table);

// CSV with columns: function, algorithm, mean, std.
void write_table_csv(const ResultTable& table, std::ostream& out);

nlohmann::ordered_json friedman_to_json(const FriedmanResult& result);

}  // namespace wolfpack::stats
