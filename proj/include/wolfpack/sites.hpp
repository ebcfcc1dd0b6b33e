#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wolfpack::sites {

struct Observation {
    double hs;  // significant wave height [m]
    double tp;  // peak period [s]
};

// One geographic candidate point with its record of sea states.
struct SiteRecord {
    std::string point_id;
    std::string port;
    double lat = 0.0;
    double lon = 0.0;
    std::vector<Observation> records;
};

// CSV with header point_id,port,lat_deg,lon_deg,hs_m,tp_s and one observation
// per row. Rows are grouped by point_id (first occurrence fixes port/lat/lon).
// Malformed rows abort the load with an error listing the offending line
// numbers.
std::vector<SiteRecord> load_sites(const std::string& path);

// Pooled RMS distance of a record's observations from the target (H*, T*):
// sqrt( (1/2N) sum [ (hs - H*)^2 + (tp - T*)^2 ] ). Height and period enter
// unscaled (raw metres and seconds).
double site_rmse(const SiteRecord& record, double h_star, double t_star);

struct SiteRank {
    std::string point_id;
    std::string port;
    double lat = 0.0;
    double lon = 0.0;
    double rmse = 0.0;
};

// Ascending by RMSE, ties broken by point_id.
std::vector<SiteRank> rank_sites(const std::vector<SiteRecord>& records, double h_star,
                                 double t_star);

// CSV columns: point_id, port, lat, lon, rmse.
void write_ranking_csv(const std::vector<SiteRank>& ranking, std::ostream& out);

}  // namespace wolfpack::sites
