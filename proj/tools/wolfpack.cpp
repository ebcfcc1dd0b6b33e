// wolfpack: GWO-family optimization toolkit with an OSWEC power objective.
//
// Subcommands: bench (and `bench list`), optimize, simulate, sweep, site.
// Every command honors --seed end to end; identical invocations produce
// byte-identical artifacts under out/<command>/<tag>/.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wolfpack/benchmarks.hpp"
#include "wolfpack/config.hpp"
#include "wolfpack/csvfmt.hpp"
#include "wolfpack/optimizer.hpp"
#include "wolfpack/parallel.hpp"
#include "wolfpack/sites.hpp"
#include "wolfpack/stats.hpp"
#include "wolfpack/sweeps.hpp"
#include "wolfpack/wec_objective.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalArgs {
    std::string config_path;
    std::string out_root = "out";
    std::string tag;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs;
};

std::string default_tag() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", std::gmtime(&now));
    return buf;
}

// Seed precedence: --seed flag, explicit config value, WOLFPACK_SEED, 42.
std::uint64_t resolve_seed(const GlobalArgs& args, const wolfpack::AppConfig& config) {
    if (args.seed) return *args.seed;
    if (config.optimizer.seed_from_file) return config.optimizer.seed;
    if (const char* env = std::getenv("WOLFPACK_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw wolfpack::ConfigError("WOLFPACK_SEED is not an integer");
    }
    return config.optimizer.seed;
}

fs::path make_out_dir(const GlobalArgs& args, const std::string& command) {
    const fs::path dir =
        fs::path(args.out_root) / command / (args.tag.empty() ? default_tag() : args.tag);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

void write_json(const fs::path& path, const ordered_json& j) {
    write_file(path, j.dump(2) + "\n");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            if (start < text.size()) out.push_back(text.substr(start));
            break;
        }
        if (comma > start) out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

int cmd_bench_list() {
    std::cout << "id,name,dim,lower,upper,fmin_ref\n";
    for (const auto& info : wolfpack::bench::list_benchmarks()) {
        std::cout << info.id << ',' << info.name << ',' << info.dim << ','
                  << wolfpack::fmt_double(info.lower) << ',' << wolfpack::fmt_double(info.upper)
                  << ',' << wolfpack::fmt_double(info.fmin_ref) << '\n';
    }
    return 0;
}

int cmd_bench(const GlobalArgs& args, const wolfpack::AppConfig& config,
              const std::string& algos_csv, const std::string& funcs_csv, int repeats,
              int iters, int agents) {
    wolfpack::stats::ExperimentGrid grid;
    if (algos_csv.empty()) {
        grid.algorithms = wolfpack::stats::default_algorithms();
    } else {
        for (const auto& name : split_list(algos_csv))
            grid.algorithms.push_back(wolfpack::stats::make_algorithm(name));
    }
    if (funcs_csv.empty()) {
        for (const auto& info : wolfpack::bench::list_benchmarks())
            grid.functions.push_back(info.id);
    } else {
        grid.functions = split_list(funcs_csv);
    }
    grid.repeats = repeats > 0 ? repeats : config.optimizer.repeats;
    grid.max_iter = iters > 0 ? iters : config.optimizer.iters;
    grid.population = agents > 0 ? agents : config.optimizer.agents;
    grid.base_seed = resolve_seed(args, config);
    for (const auto& a : grid.algorithms) a.variant.validate();

    const int jobs = args.jobs.value_or(config.optimizer.jobs);
    const auto table = wolfpack::stats::run_experiment(grid, jobs);

    const fs::path dir = make_out_dir(args, "bench");
    {
        std::ofstream out(dir / "table5.csv", std::ios::binary);
        wolfpack::stats::write_table_csv(table, out);
    }
    ordered_json fj;
    if (table.algorithms.size() >= 2 && table.functions.size() >= 2) {
        const auto friedman = wolfpack::stats::friedman_ranks(table);
        fj = wolfpack::stats::friedman_to_json(friedman);
        std::cout << "friedman statistic " << friedman.statistic << " over "
                  << friedman.n_functions << " functions\n";
        for (const auto& [name, rank] : friedman.average_ranks)
            std::cout << "  " << name << " avg rank " << rank << '\n';
    } else {
        fj["error"] = "friedman ranking needs at least 2 algorithms and 2 functions";
    }
    write_json(dir / "friedman.json", fj);
    std::cout << "wrote " << (dir / "table5.csv").string() << '\n';
    return 0;
}

int cmd_optimize(const GlobalArgs& args, const wolfpack::AppConfig& config,
                 const std::string& variant, int runs, int iters, int agents) {
    const std::string variant_name = variant.empty() ? config.optimizer.variant : variant;
    wolfpack::stats::AlgorithmSpec algo = wolfpack::stats::make_algorithm(variant_name);
    if (algo.hybrid) algo.hybrid = config.optimizer.hc;

    const wolfpack::wec::WecContext ctx = wolfpack::context_from_config(config);
    const wolfpack::SearchSpace space = wolfpack::space_from_config(config);
    const wolfpack::ObjectiveSpec objective = wolfpack::wec::power_objective(ctx);

    const int n_runs = runs > 0 ? runs : config.optimizer.runs;
    const std::uint64_t base_seed = resolve_seed(args, config);
    const int jobs = args.jobs.value_or(config.optimizer.jobs);

    std::vector<wolfpack::RunResult> results(static_cast<std::size_t>(n_runs));
    wolfpack::parallel_cells(n_runs, jobs, [&](int k) {
        wolfpack::RunConfig run_config;
        run_config.population = agents > 0 ? agents : config.optimizer.agents;
        run_config.max_iter = iters > 0 ? iters : config.optimizer.iters;
        run_config.seed = base_seed + static_cast<std::uint64_t>(k);
        run_config.variant = algo.variant;
        run_config.hybrid = algo.hybrid;
        results[static_cast<std::size_t>(k)] = wolfpack::run(objective, space, run_config);
    });

    const fs::path dir = make_out_dir(args, "optimize");
    int best_run = 0;
    for (int k = 0; k < n_runs; ++k) {
        const auto& res = results[static_cast<std::size_t>(k)];
        write_json(dir / ("run_" + std::to_string(k) + ".json"), wolfpack::to_json(res));
        std::string csv = "iter,best\n";
        for (std::size_t i = 0; i < res.convergence.size(); ++i)
            csv += std::to_string(i + 1) + ',' + wolfpack::fmt_double(res.convergence[i]) + '\n';
        write_file(dir / ("convergence_" + std::to_string(k) + ".csv"), csv);
        if (res.best_fitness > results[static_cast<std::size_t>(best_run)].best_fitness)
            best_run = k;
    }
    const auto& best = results[static_cast<std::size_t>(best_run)];

    // Re-simulate the winner so the summary records the verified motion.
    const auto sim = wolfpack::wec::simulate(
        ctx.body, ctx.coeffs, wolfpack::wec::PtoParams::from_mega(best.best_position[2], best.best_position[3]),
        wolfpack::wec::RegularWave{best.best_position[0], best.best_position[1]}, ctx.sim);
    const auto feas = wolfpack::wec::feasibility_check(sim, ctx.theta_limit_deg);

    ordered_json summary;
    summary["variant"] = variant_name;
    summary["runs"] = n_runs;
    summary["base_seed"] = base_seed;
    summary["best_run"] = best_run;
    summary["best_fitness_W"] = best.best_fitness;
    summary["best_position"] = best.best_position;
    summary["best_max_rotation_deg"] = feas.max_rotation_deg;
    summary["best_feasible"] = feas.feasible;
    ordered_json per_run = ordered_json::array();
    for (const auto& res : results)
        per_run.push_back({{"seed", res.seed},
                           {"best_fitness_W", res.best_fitness},
                           {"hc_invocations", res.hc_invocations}});
    summary["per_run"] = per_run;
    write_json(dir / "summary.json", summary);
    std::cout << "best of " << n_runs << " runs: " << best.best_fitness << " W (run " << best_run
              << ", max rotation " << feas.max_rotation_deg << " deg)\n"
              << "wrote " << (dir / "summary.json").string() << '\n';
    return 0;
}

int cmd_simulate(const GlobalArgs& args, const wolfpack::AppConfig& config, double h, double t,
                 double k, double c, const std::string& spectrum, double hs, double tp,
                 int components, std::uint64_t phase_seed) {
    const wolfpack::wec::WecContext ctx = wolfpack::context_from_config(config);
    wolfpack::wec::WaveSpec wave = wolfpack::wec::RegularWave{h, t};
    if (spectrum == "pm")
        wave = wolfpack::wec::IrregularWave{hs > 0 ? hs : h, tp > 0 ? tp : t, components,
                                            phase_seed};
    else if (!spectrum.empty() && spectrum != "regular")
        throw wolfpack::ConfigError("--spectrum must be 'regular' or 'pm'");

    const auto sim = wolfpack::wec::simulate(ctx.body, ctx.coeffs,
                                             wolfpack::wec::PtoParams::from_mega(k, c), wave,
                                             ctx.sim);
    const auto feas = wolfpack::wec::feasibility_check(sim, ctx.theta_limit_deg);

    const fs::path dir = make_out_dir(args, "simulate");
    {
        std::ofstream out(dir / "series.csv", std::ios::binary);
        wolfpack::wec::write_series_csv(sim, out);
    }
    ordered_json summary;
    summary["inputs"] = {{"H_m", h},       {"T_s", t},           {"K_MNm_per_rad", k},
                         {"C_MNsm_per_rad", c}, {"spectrum", spectrum.empty() ? "regular" : spectrum}};
    summary["max_rotation_deg"] = sim.summary.max_rotation_deg;
    summary["max_angular_velocity_deg_s"] = sim.summary.max_ang_vel_deg_s;
    summary["mean_angular_velocity_deg_s"] = sim.summary.mean_ang_vel_deg_s;
    summary["max_pto_force_Nm"] = sim.summary.max_pto_force;
    summary["max_power_W"] = sim.summary.max_power;
    summary["mean_power_W"] = sim.summary.mean_power;
    summary["feasibility"] = {{"feasible", feas.feasible},
                              {"max_rotation_deg", feas.max_rotation_deg},
                              {"theta_limit_deg", ctx.theta_limit_deg}};
    write_json(dir / "summary.json", summary);
    std::cout << "mean power " << sim.summary.mean_power << " W, max rotation "
              << feas.max_rotation_deg << " deg, feasible " << (feas.feasible ? "yes" : "no")
              << "\nwrote " << (dir / "summary.json").string() << '\n';
    return 0;
}

int cmd_sweep(const GlobalArgs& args, const wolfpack::AppConfig& config,
              const std::string& vary_csv, const std::string& fix_csv, int n1, int n2) {
    wolfpack::wec::GridSweepSpec spec;
    spec.vary1 = config.sweep.vary1;
    spec.vary2 = config.sweep.vary2;
    spec.fixed_h = config.sweep.fix_h;
    spec.fixed_t = config.sweep.fix_t;
    spec.fixed_k = config.sweep.fix_k;
    spec.fixed_c = config.sweep.fix_c;
    if (!vary_csv.empty()) {
        const auto vars = split_list(vary_csv);
        if (vars.size() != 2) throw wolfpack::ConfigError("--vary needs two of H,T,K,C");
        spec.vary1 = vars[0];
        spec.vary2 = vars[1];
    }
    for (const auto& assign : split_list(fix_csv)) {
        const std::size_t eq = assign.find('=');
        double value = 0.0;
        if (eq == std::string::npos || !wolfpack::parse_double(assign.substr(eq + 1), value))
            throw wolfpack::ConfigError("--fix expects NAME=VALUE pairs, got '" + assign + "'");
        const std::string name = assign.substr(0, eq);
        if (name == "H") spec.fixed_h = value;
        else if (name == "T") spec.fixed_t = value;
        else if (name == "K") spec.fixed_k = value;
        else if (name == "C") spec.fixed_c = value;
        else throw wolfpack::ConfigError("--fix variable must be one of H,T,K,C");
    }

    const auto& sp = config.space;
    auto bounds = [&](const std::string& name) -> std::pair<double, double> {
        if (name == "H") return {sp.h_min, sp.h_max};
        if (name == "T") return {sp.t_min, sp.t_max};
        if (name == "K") return {sp.k_min, sp.k_max};
        if (name == "C") return {sp.c_min, sp.c_max};
        throw wolfpack::ConfigError("sweep variable must be one of H,T,K,C");
    };
    const auto [lo1, hi1] = bounds(spec.vary1);
    const auto [lo2, hi2] = bounds(spec.vary2);
    spec.grid1 = wolfpack::linspace(lo1, hi1, n1 > 0 ? n1 : config.sweep.n1);
    spec.grid2 = wolfpack::linspace(lo2, hi2, n2 > 0 ? n2 : config.sweep.n2);

    const wolfpack::wec::WecContext ctx = wolfpack::context_from_config(config);
    const int jobs = args.jobs.value_or(config.optimizer.jobs);
    const auto result = wolfpack::wec::sensitivity_grid(spec, ctx, jobs);

    const fs::path dir = make_out_dir(args, "sweep");
    {
        std::ofstream out(dir / "grid.csv", std::ios::binary);
        wolfpack::wec::write_grid_csv(result, out);
    }
    ordered_json summary;
    summary["vary"] = {spec.vary1, spec.vary2};
    summary["fix"] = {{"H", spec.fixed_h}, {"T", spec.fixed_t}, {"K", spec.fixed_k}, {"C", spec.fixed_c}};
    if (result.best_cell) {
        const auto [bi, bj] = *result.best_cell;
        summary["best_feasible"] = {{spec.vary1, result.grid1[static_cast<std::size_t>(bi)]},
                                    {spec.vary2, result.grid2[static_cast<std::size_t>(bj)]},
                                    {"power_W", result.at(bi, bj).power}};
    } else {
        summary["best_feasible"] = nullptr;
    }
    write_json(dir / "summary.json", summary);
    std::cout << "wrote " << (dir / "grid.csv").string() << '\n';
    return 0;
}

int cmd_site(const GlobalArgs& args, const wolfpack::AppConfig& config, double h_star,
             double t_star, const std::string& data) {
    const std::string path = data.empty() ? config.sites.data : data;
    if (path.empty())
        throw wolfpack::ConfigError("site: no observations CSV (use --data or sites.data)");
    const auto records = wolfpack::sites::load_sites(path);
    const auto ranking = wolfpack::sites::rank_sites(records, h_star, t_star);

    const fs::path dir = make_out_dir(args, "site");
    {
        std::ofstream out(dir / "ranking.csv", std::ios::binary);
        wolfpack::sites::write_ranking_csv(ranking, out);
    }
    std::cout << "best site: " << ranking.front().point_id << " (" << ranking.front().port
              << ") rmse " << ranking.front().rmse << "\nwrote "
              << (dir / "ranking.csv").string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wolfpack: grey-wolf optimizer variants with an oscillating-surge "
                 "wave-energy-converter power objective"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalArgs args;
    std::vector<std::string> overrides;
    app.add_option("--config", args.config_path, "JSON config file");
    app.add_option("--set", overrides,
                   "override any config key, e.g. --set model.dt=0.05 (repeatable)");
    app.add_option("--out", args.out_root, "output root directory")->capture_default_str();
    app.add_option("--tag", args.tag, "output subdirectory tag (default: UTC timestamp)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "base seed (fallback: WOLFPACK_SEED, then 42)");
    int jobs_value = 0;
    auto* jobs_opt =
        app.add_option("--jobs", jobs_value, "parallel cells: 0 = all threads, 1 = serial");

    auto* bench = app.add_subcommand("bench", "benchmark-suite experiments and rankings");
    auto* bench_list = bench->add_subcommand("list", "print benchmark metadata as CSV");
    std::string algos_csv, funcs_csv;
    int repeats = 0, iters = 0, agents = 0;
    bench->add_option("--algos", algos_csv, "comma list of gwo,mgwo,eegwo,igwo,ergwo,hc-egwo (default: all)");
    bench->add_option("--funcs", funcs_csv, "comma list of F1..F16 (default: all)");
    bench->add_option("--repeats", repeats, "repeats per cell (default: optimizer.repeats = 30)");
    bench->add_option("--iters", iters, "iterations per run (default: optimizer.iters = 1000)");
    bench->add_option("--agents", agents, "population size (default: optimizer.agents = 20)");

    auto* optimize = app.add_subcommand("optimize", "seeded runs of the power objective");
    std::string variant;
    int runs = 0, opt_iters = 0, opt_agents = 0;
    optimize->add_option("--variant", variant, "gwo|mgwo|eegwo|igwo|ergwo|hc-egwo (default: hc-egwo)");
    optimize->add_option("--runs", runs, "number of seeded runs (default: optimizer.runs = 10)");
    optimize->add_option("--iters", opt_iters, "iterations per run (default: optimizer.iters = 1000)");
    optimize->add_option("--agents", opt_agents, "population size (default: optimizer.agents = 20)");

    auto* simulate = app.add_subcommand("simulate", "single time-domain simulation");
    double sH = 2.5, sT = 8.0, sK = 0.0, sC = 0.012;
    std::string spectrum = "regular";
    double hs = 0.0, tp = 0.0;
    int components = 200;
    std::uint64_t phase_seed = 0;
    simulate->add_option("--H", sH, "wave height [m]")->capture_default_str();
    simulate->add_option("--T", sT, "wave period [s]")->capture_default_str();
    simulate->add_option("--K", sK, "PTO stiffness [MNm/rad]")->capture_default_str();
    simulate->add_option("--C", sC, "PTO damping [MNsm/rad]")->capture_default_str();
    simulate->add_option("--spectrum", spectrum, "regular | pm")->capture_default_str();
    simulate->add_option("--hs", hs, "significant wave height for pm [m]");
    simulate->add_option("--tp", tp, "peak period for pm [s]");
    simulate->add_option("--components", components, "pm frequency bands")->capture_default_str();
    simulate->add_option("--phase-seed", phase_seed, "pm phase seed")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "two-parameter power grid with feasibility mask");
    std::string vary_csv, fix_csv;
    int n1 = 0, n2 = 0;
    sweep->add_option("--vary", vary_csv, "two of H,T,K,C, e.g. K,C (default: sweep.vary)");
    sweep->add_option("--fix", fix_csv, "fixed values, e.g. H=4.223,T=7.39");
    sweep->add_option("--n1", n1, "grid points for the first variable (default: sweep.n1 = 25)");
    sweep->add_option("--n2", n2, "grid points for the second variable (default: sweep.n2 = 25)");

    auto* site = app.add_subcommand("site", "rank candidate sites by RMSE to (H*, T*)");
    double h_star = 0.0, t_star = 0.0;
    std::string site_data;
    site->add_option("--hstar", h_star, "target wave height H* [m]")->required();
    site->add_option("--tstar", t_star, "target wave period T* [s]")->required();
    site->add_option("--data", site_data, "observations CSV (default: sites.data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are config errors
    }

    try {
        wolfpack::AppConfig config;
        if (!args.config_path.empty()) config = wolfpack::load_config(args.config_path);
        for (const auto& assignment : overrides) wolfpack::apply_override(config, assignment);
        if (seed_opt->count() > 0) args.seed = seed_value;
        if (jobs_opt->count() > 0) args.jobs = jobs_value;

        if (bench->parsed()) {
            if (bench_list->parsed()) return cmd_bench_list();
            return cmd_bench(args, config, algos_csv, funcs_csv, repeats, iters, agents);
        }
        if (optimize->parsed())
            return cmd_optimize(args, config, variant, runs, opt_iters, opt_agents);
        if (simulate->parsed())
            return cmd_simulate(args, config, sH, sT, sK, sC, spectrum, hs, tp, components,
                                phase_seed);
        if (sweep->parsed()) return cmd_sweep(args, config, vary_csv, fix_csv, n1, n2);
        if (site->parsed()) return cmd_site(args, config, h_star, t_star, site_data);
    } catch (const wolfpack::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
