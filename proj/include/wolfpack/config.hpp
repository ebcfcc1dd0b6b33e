#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wolfpack/core.hpp"
#include "wolfpack/hill_climb.hpp"
#include "wolfpack/wec_objective.hpp"

namespace wolfpack {

// Bad configuration (unknown key, malformed value, unknown name). The CLI
// maps this to exit code 2; runtime failures exit 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Application configuration with one section per concern. Every key has the
// default below; a JSON config file may override any subset, and unknown
// keys are rejected. Flags override file values.
struct AppConfig {
    struct Optimizer {
        std::string variant = "hc-egwo";
        int agents = 20;
        int iters = 1000;
        std::uint64_t seed = 42;
        bool seed_from_file = false;  // explicit seed in the config file
        int repeats = 30;             // bench repeats
        int runs = 10;                // optimize runs
        int jobs = 0;                 // 0 = all threads, 1 = serial reference
        HcConfig hc;
    } optimizer;

    struct Space {
        double h_min = 0.5, h_max = 5.0;     // m
        double t_min = 2.0, t_max = 12.0;    // s
        double k_min = 0.0, k_max = 100.0;   // MN m/rad
        double c_min = 0.01, c_max = 200.0;  // MN s m/rad
    } space;

    struct Model {
        std::string coeffs = "synthetic";  // or a coefficient CSV path
        double inertia = 1.85e6;
        double flap_mass = 127000.0;
        double cg_z = -3.9;
        double restoring = 6.4e6;
        double t_end = 400.0;
        double ramp = 100.0;
        double dt = 0.1;
        double memory = 20.0;
        double theta_limit_deg = 30.0;
    } model;

    struct Sweep {
        std::string vary1 = "K";
        std::string vary2 = "C";
        int n1 = 25;
        int n2 = 25;
        double fix_h = 2.5;
        double fix_t = 8.0;
        double fix_k = 0.0;
        double fix_c = 90.0;
    } sweep;

    struct Sites {
        std::string data;  // observations CSV path
    } sites;
};

// Parses and validates a JSON config file over the defaults.
AppConfig load_config(const std::string& path);

// Applies one "section.key=value" override (the CLI's --set flag). Every
// config key is addressable; bounds split into .min/.max, e.g. space.h.max.
// Unknown keys or unparsable values raise ConfigError.
void apply_override(AppConfig& config, const std::string& assignment);

// The 4-d decision space configured in `space` (m, s, MN m/rad, MN s m/rad).
SearchSpace space_from_config(const AppConfig& config);

// Model context: synthetic or CSV coefficients plus body and sim settings.
wec::WecContext context_from_config(const AppConfig& config);

}  // namespace wolfpack
