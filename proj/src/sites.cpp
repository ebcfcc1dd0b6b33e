#include "wolfpack/sites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "wolfpack/csvfmt.hpp"

namespace wolfpack::sites {

std::vector<SiteRecord> load_sites(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sites file '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{
                                       "point_id", "port", "lat_deg", "lon_deg", "hs_m", "tp_s"})
        throw std::runtime_error(path + ": missing header point_id,port,lat_deg,lon_deg,hs_m,tp_s");

    std::vector<SiteRecord> records;
    std::vector<int> bad_lines;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        double lat, lon, hs, tp;
        if (fields.size() != 6 || fields[0].empty() || !parse_double(fields[2], lat) ||
            !parse_double(fields[3], lon) || !parse_double(fields[4], hs) ||
            !parse_double(fields[5], tp) || !(hs > 0.0) || !(tp > 0.0)) {
            bad_lines.push_back(line_no);
            continue;
        }
        auto it = std::find_if(records.begin(), records.end(),
                               [&](const SiteRecord& r) { return r.point_id == fields[0]; });
        if (it == records.end()) {
            records.push_back(SiteRecord{fields[0], fields[1], lat, lon, {}});
            it = records.end() - 1;
        }
        it->records.push_back(Observation{hs, tp});
    }
    if (!bad_lines.empty()) {
        std::string msg = path + ": malformed row(s) at line";
        if (bad_lines.size() > 1) msg += 's';
        for (int n : bad_lines) msg += ' ' + std::to_string(n);
        throw std::runtime_error(msg);
    }
    if (records.empty()) throw std::runtime_error(path + ": no observations");
    return records;
}

double site_rmse(const SiteRecord& record, double h_star, double t_star) {
    if (record.records.empty())
        throw std::invalid_argument("site_rmse: record has no observations");
    double sum = 0.0;
    for (const Observation& obs : record.records) {
        const double dh = obs.hs - h_star;
        const double dt = obs.tp - t_star;
        sum += dh * dh + dt * dt;
    }
    return std::sqrt(sum / (2.0 * static_cast<double>(record.records.size())));
}

std::vector<SiteRank> rank_sites(const std::vector<SiteRecord>& records, double h_star,
                                 double t_star) {
    if (records.empty()) throw std::invalid_argument("rank_sites: no records");
    std::vector<SiteRank> ranking;
    ranking.reserve(records.size());
    for (const SiteRecord& r : records)
        ranking.push_back(SiteRank{r.point_id, r.port, r.lat, r.lon, site_rmse(r, h_star, t_star)});
    std::stable_sort(ranking.begin(), ranking.end(), [](const SiteRank& a, const SiteRank& b) {
        if (a.rmse != b.rmse) return a.rmse < b.rmse;
        return a.point_id < b.point_id;
    });
    return ranking;
}

void write_ranking_csv(const std::vector<SiteRank>& ranking, std::ostream& out) {
    out << "point_id,port,lat,lon,rmse\n";
    for (const SiteRank& r : ranking) {
        out << r.point_id << ',' << r.port << ',' << fmt_double(r.lat) << ',' << fmt_double(r.lon)
            << ',' << fmt_double(r.rmse) << '\n';
    }
}

}  // namespace wolfpack::sites
