#include "wolfpack/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "wolfpack/csvfmt.hpp"
#include "wolfpack/parallel.hpp"

namespace wolfpack::stats {

AlgorithmSpec make_algorithm(const std::string& name) {
    AlgorithmSpec spec;
    spec.name = name;
    spec.variant.kind = parse_variant(name);
    if (name == "hc-egwo") spec.hybrid = HcConfig{};
    return spec;
}

std::vector<AlgorithmSpec> default_algorithms() {
    std::vector<AlgorithmSpec> algos;
    for (const char* name : {"gwo", "mgwo", "eegwo", "igwo", "ergwo", "hc-egwo"})
        algos.push_back(make_algorithm(name));
    return algos;
}

void ExperimentGrid::validate() const {
    if (algorithms.empty()) throw std::invalid_argument("ExperimentGrid: no algorithms");
    if (functions.empty()) throw std::invalid_argument("ExperimentGrid: no functions");
    if (repeats < 2) throw std::invalid_argument("ExperimentGrid: repeats must be >= 2");
    if (population < 1 || max_iter < 2)
        throw std::invalid_argument("ExperimentGrid: bad population/max_iter");
    for (const auto& f : functions) bench::benchmark_info(f);  // throws on unknown ids
}

const CellStats& ResultTable::cell(const std::string& algorithm,
                                   const std::string& function) const {
    for (const auto& c : cells) {
        if (c.algorithm == algorithm && c.function == function) return c;
    }
    throw std::invalid_argument("ResultTable: no cell (" + algorithm + ", " + function + ")");
}

ResultTable run_experiment(const ExperimentGrid& grid, int jobs) {
    grid.validate();
    const int n_algos = static_cast<int>(grid.algorithms.size());
    const int n_funcs = static_cast<int>(grid.functions.size());
    const int repeats = grid.repeats;

    // One task per (function, algorithm, repeat); each writes its own slot.
    std::vector<double> raw(static_cast<std::size_t>(n_funcs) * n_algos * repeats);
    parallel_cells(n_funcs * n_algos * repeats, jobs, [&](int task) {
        const int k = task % repeats;
        const int a = (task / repeats) % n_algos;
        const int f = task / (repeats * n_algos);
        const AlgorithmSpec& algo = grid.algorithms[a];
        const bench::BenchmarkInfo& info = bench::benchmark_info(grid.functions[f]);

        RunConfig config;
        config.population = grid.population;
        config.max_iter = grid.max_iter;
        config.seed = grid.base_seed + static_cast<std::uint64_t>(k);
        config.variant = algo.variant;
        config.hybrid = algo.hybrid;

        const SearchSpace space = bench::benchmark_space(info);
        const ObjectiveSpec objective = bench::make_objective(info);
        raw[static_cast<std::size_t>(task)] = run(objective, space, config).best_fitness;
    });

    ResultTable table;
    table.direction = Direction::Minimize;
    for (const auto& algo : grid.algorithms) table.algorithms.push_back(algo.name);
    table.functions = grid.functions;
    table.cells.reserve(static_cast<std::size_t>(n_funcs) * n_algos);
    for (int f = 0; f < n_funcs; ++f) {
        for (int a = 0; a < n_algos; ++a) {
            CellStats cell;
            cell.algorithm = grid.algorithms[a].name;
            cell.function = grid.functions[f];
            cell.raw.assign(raw.begin() + (static_cast<std::size_t>(f) * n_algos + a) * repeats,
                            raw.begin() + (static_cast<std::size_t>(f) * n_algos + a + 1) * repeats);
            double mean = 0.0;
            for (double v : cell.raw) mean += v;
            mean /= static_cast<double>(repeats);
            double var = 0.0;
            for (double v : cell.raw) var += (v - mean) * (v - mean);
            cell.mean = mean;
            cell.stddev = std::sqrt(var / static_cast<double>(repeats - 1));
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

FriedmanResult friedman_ranks(const ResultTable& table) {
    const int k = static_cast<int>(table.algorithms.size());
    if (k < 2) throw std::invalid_argument("friedman_ranks: need at least 2 algorithms");
    if (table.functions.size() < 2)
        throw std::invalid_argument("friedman_ranks: need at least 2 functions");

    FriedmanResult result;
    result.k_algorithms = k;
    std::map<std::string, double> rank_sum;
    for (const auto& a : table.algorithms) rank_sum[a] = 0.0;

    int n = 0;
    for (const auto& fn : table.functions) {
        std::vector<double> means(k);
        bool bad = false;
        for (int a = 0; a < k; ++a) {
            means[a] = table.cell(table.algorithms[a], fn).mean;
            if (std::isnan(means[a])) bad = true;
        }
        if (bad) {
            std::cerr << "friedman_ranks: excluding " << fn << " (NaN mean)\n";
            result.excluded.push_back(fn);
            continue;
        }
        // Mid-rank assignment: sort indices by mean (best first), then give
        // tied groups the average of their positions.
        std::vector<int> order(k);
        for (int a = 0; a < k; ++a) order[a] = a;
        std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            return better(means[lhs], means[rhs], table.direction);
        });
        int pos = 0;
        while (pos < k) {
            int end = pos;
            while (end + 1 < k && means[order[end + 1]] == means[order[pos]]) ++end;
            const double mid = (static_cast<double>(pos + 1) + static_cast<double>(end + 1)) / 2.0;
            for (int i = pos; i <= end; ++i) rank_sum[table.algorithms[order[i]]] += mid;
            pos = end + 1;
        }
        ++n;
    }
    if (n == 0) throw std::runtime_error("friedman_ranks: every function was excluded");

    result.n_functions = n;
    double sum_r2 = 0.0;
    for (const auto& a : table.algorithms) {
        const double avg = rank_sum[a] / static_cast<double>(n);
        result.average_ranks[a] = avg;
        sum_r2 += avg * avg;
    }
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    result.statistic = 12.0 * nd / (kd * (kd + 1.0)) * sum_r2 - 3.0 * nd * (kd + 1.0);
    return result;
}

void write_table_csv(const ResultTable& table, std::ostream& out) {
    out << "function,algorithm,mean,std\n";
    for (const auto& cell : table.cells) {
        out << cell.function << ',' << cell.algorithm << ',' << fmt_double(cell.mean) << ','
            << fmt_double(cell.stddev) << '\n';
    }
}

nlohmann::ordered_json friedman_to_json(const FriedmanResult& result) {
    nlohmann::ordered_json j;
    j["ranks"] = result.average_ranks;
    j["statistic"] = result.statistic;
    j["n"] = result.n_functions;
    j["k"] = result.k_algorithms;
    if (!result.excluded.empty()) j["excluded"] = result.excluded;
    return j;
}

}  // namespace wolfpack::stats
