#include "wolfpack/hydro.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "wolfpack/csvfmt.hpp"

namespace wolfpack::wec {

void BodyProps::validate() const {
    if (!(inertia > 0.0)) throw std::invalid_argument("BodyProps: inertia must be positive");
    if (!(restoring > 0.0)) throw std::invalid_argument("BodyProps: restoring must be positive");
}

void HydroCoeffs::validate() const {
    const std::size_t n = omega.size();
    if (n < 2) throw std::invalid_argument("HydroCoeffs: need at least 2 frequency points");
    if (added_mass.size() != n || rad_damping.size() != n || exc_amp.size() != n ||
        exc_phase.size() != n)
        throw std::invalid_argument("HydroCoeffs: column lengths differ");
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !(omega[i] > omega[i - 1]))
            throw std::invalid_argument("HydroCoeffs: omega grid must be strictly ascending");
        if (rad_damping[i] < 0.0)
            throw std::invalid_argument("HydroCoeffs: radiation damping must be >= 0");
    }
    if (a_inf < 0.0) throw std::invalid_argument("HydroCoeffs: a_inf must be >= 0");
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x,
              const char* what) {
    if (x < xs.front() || x > xs.back())
        throw std::domain_error(std::string(what) + ": frequency " + fmt_double(x) +
                                " rad/s outside coefficient grid [" + fmt_double(xs.front()) +
                                ", " + fmt_double(xs.back()) + "]");
    std::size_t hi = 1;
    while (hi + 1 < xs.size() && xs[hi] < x) ++hi;
    const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
}

}  // namespace

double HydroCoeffs::exc_amp_at(double w) const { return interp(omega, exc_amp, w, "exc_amp"); }
double HydroCoeffs::exc_phase_at(double w) const {
    return interp(omega, exc_phase, w, "exc_phase");
}

HydroCoeffs synthetic_coeffs_default() {
    HydroCoeffs c;
    const int n = 63;  // 0.1 .. 3.2 rad/s
    for (int i = 0; i < n; ++i) {
        const double w = 0.1 + 0.05 * static_cast<double>(i);
        const double bump_a = (w - 0.65) / 0.75;
        const double bump_b = (w - 0.85) / 0.50;
        const double bump_e = (w - 0.70) / 1.50;
        c.omega.push_back(w);
        c.added_mass.push_back(9.0e6 + 2.4e6 * std::exp(-bump_a * bump_a));
        c.rad_damping.push_back(3.1e6 * std::exp(-bump_b * bump_b));
        c.exc_amp.push_back(2.4e6 * std::exp(-bump_e * bump_e));
        c.exc_phase.push_back(-(0.55 * w + 0.08 * w * w));
    }
    c.a_inf = c.added_mass.back();
    c.validate();
    return c;
}

HydroCoeffs load_coeffs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");

    HydroCoeffs c;
    bool have_a_inf = false;
    bool have_header = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line[0] == '#') {
            const std::size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                key.erase(0, key.find_first_not_of(" \t"));
                key.erase(key.find_last_not_of(" \t") + 1);
                if (key == "a_inf_kgm2") {
                    double v = 0.0;
                    if (!parse_double(line.substr(eq + 1), v))
                        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                                 ": bad a_inf_kgm2 value");
                    c.a_inf = v;
                    have_a_inf = true;
                }
            }
            continue;
        }
        const auto fields = split_csv_line(line);
        if (!have_header) {
            if (fields.size() != 5 || fields[0] != "omega_rad_s" ||
                fields[1] != "added_mass_kgm2" || fields[2] != "rad_damping_Nms_rad" ||
                fields[3] != "exc_amp_Nm_per_m" || fields[4] != "exc_phase_rad")
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected header omega_rad_s,added_mass_kgm2,"
                                         "rad_damping_Nms_rad,exc_amp_Nm_per_m,exc_phase_rad");
            have_header = true;
            continue;
        }
        double v[5];
        if (fields.size() != 5 || !parse_double(fields[0], v[0]) ||
            !parse_double(fields[1], v[1]) || !parse_double(fields[2], v[2]) ||
            !parse_double(fields[3], v[3]) || !parse_double(fields[4], v[4]))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": non-numeric coefficient row");
        c.omega.push_back(v[0]);
        c.added_mass.push_back(v[1]);
        c.rad_damping.push_back(v[2]);
        c.exc_amp.push_back(v[3]);
        c.exc_phase.push_back(v[4]);
    }
    if (!have_header) throw std::runtime_error(path + ": missing header row");
    if (!have_a_inf) throw std::runtime_error(path + ": missing '# a_inf_kgm2=' sidecar key");
    c.validate();
    return c;
}

void write_coeffs_csv(const HydroCoeffs& coeffs, std::ostream& out) {
    out << "# a_inf_kgm2=" << fmt_double(coeffs.a_inf) << '\n';
    out << "omega_rad_s,added_mass_kgm2,rad_damping_Nms_rad,exc_amp_Nm_per_m,exc_phase_rad\n";
    for (std::size_t i = 0; i < coeffs.omega.size(); ++i) {
        out << fmt_double(coeffs.omega[i]) << ',' << fmt_double(coeffs.added_mass[i]) << ','
            << fmt_double(coeffs.rad_damping[i]) << ',' << fmt_double(coeffs.exc_amp[i]) << ','
            << fmt_double(coeffs.exc_phase[i]) << '\n';
    }
}

std::vector<double> radiation_irf(const HydroCoeffs& coeffs,
                                  const std::vector<double>& tau_grid) {
    coeffs.validate();
    std::vector<double> kr(tau_grid.size());
    for (std::size_t k = 0; k < tau_grid.size(); ++k) {
        const double tau = tau_grid[k];
        if (tau < 0.0) throw std::invalid_argument("radiation_irf: tau must be >= 0");
        if (k > 0 && tau < tau_grid[k - 1])
            throw std::invalid_argument("radiation_irf: tau grid must be ascending");
        double integral = 0.0;
        for (std::size_t i = 1; i < coeffs.omega.size(); ++i) {
            const double f0 = coeffs.rad_damping[i - 1] * std::cos(coeffs.omega[i - 1] * tau);
            const double f1 = coeffs.rad_damping[i] * std::cos(coeffs.omega[i] * tau);
            integral += 0.5 * (f0 + f1) * (coeffs.omega[i] - coeffs.omega[i - 1]);
        }
        kr[k] = 2.0 / std::numbers::pi * integral;
    }
    return kr;
}

}  // namespace wolfpack::wec
