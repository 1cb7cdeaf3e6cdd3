#include "orbitacc/io.hpp"

#include <cstdio>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace orbitacc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_orbit_csv(std::ostream& os, const OrbitRecord& record) {
    os << "j,re1,im1,re2,im2,bdist\n";
    for (const OrbitEntry& e : record.entries) {
        os << e.j << ',' << format_double(e.point.z1.real()) << ','
           << format_double(e.point.z1.imag()) << ','
           << format_double(e.point.z2.real()) << ','
           << format_double(e.point.z2.imag()) << ','
           << format_double(e.bdist) << '\n';
    }
}

void write_cloud_csv(std::ostream& os, const PointCloud& cloud) {
    os << "re1,im1,re2,im2\n";
    for (const Real4& p : cloud.points) {
        os << format_double(p[0]) << ',' << format_double(p[1]) << ','
           << format_double(p[2]) << ',' << format_double(p[3]) << '\n';
    }
}

PointCloud read_cloud_csv(std::istream& is) {
    PointCloud cloud;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("re1", 0) == 0) continue;  // header
        }
        std::istringstream ss(line);
        Real4 row{};
        char sep = ',';
        for (int k = 0; k < 4; ++k) {
            if (!(ss >> row[k])) throw std::invalid_argument("bad cloud CSV row: " + line);
            if (k < 3 && !(ss >> sep && sep == ','))
                throw std::invalid_argument("bad cloud CSV row: " + line);
        }
        cloud.points.push_back(row);
    }
    return cloud;
}

nlohmann::json orbit_to_json(const OrbitRecord& record) {
    nlohmann::json entries = nlohmann::json::array();
    for (const OrbitEntry& e : record.entries)
        entries.push_back({{"j", e.j},
                           {"point", {e.point.z1.real(), e.point.z1.imag(),
                                      e.point.z2.real(), e.point.z2.imag()}},
                           {"bdist", e.bdist}});
    nlohmann::json out{{"entries", std::move(entries)}, {"converged", record.converged}};
    if (record.limit)
        out["limit"] = {record.limit->z1.real(), record.limit->z1.imag(),
                        record.limit->z2.real(), record.limit->z2.imag()};
    return out;
}

nlohmann::json cloud_to_json(const PointCloud& cloud) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Real4& p : cloud.points) arr.push_back({p[0], p[1], p[2], p[3]});
    return arr;
}

nlohmann::json clusters_to_json(const ClusterSet& set) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Cluster& c : set.clusters)
        arr.push_back({{"center", {c.center[0], c.center[1], c.center[2], c.center[3]}},
                       {"count", c.count},
                       {"radius", c.radius}});
    return {{"clusters", std::move(arr)}, {"unassigned", set.unassigned}};
}

nlohmann::json dimension_to_json(const DimensionEstimate& est) {
    nlohmann::json scales = nlohmann::json::array();
    for (const ScaleCount& sc : est.scales)
        scales.push_back({{"eps", sc.eps}, {"count", sc.count}});
    return {{"slope", est.slope}, {"r2", est.r2}, {"scales", std::move(scales)}};
}

JRange parse_jrange(const std::string& text) {
    JRange r;
    char sep1 = 0, sep2 = 0;
    std::istringstream ss(text);
    if (!(ss >> r.lo >> sep1 >> r.hi) || sep1 != ':')
        throw std::invalid_argument("bad j range (expected a:b[:step]): " + text);
    if (ss >> sep2) {
        if (sep2 != ':' || !(ss >> r.step) || r.step <= 0)
            throw std::invalid_argument("bad j range step: " + text);
    }
    if (r.lo > r.hi) throw std::invalid_argument("bad j range (a > b): " + text);
    return r;
}

CPoint2 parse_point(const std::string& text) {
    std::vector<double> vals;
    std::istringstream ss(text);
    double v = 0.0;
    char sep = ',';
    while (ss >> v) {
        vals.push_back(v);
        if (!(ss >> sep)) break;
        if (sep != ',') throw std::invalid_argument("bad point: " + text);
    }
    if (vals.size() == 2) return {Complex{vals[0], vals[1]}, Complex{0.0, 0.0}};
    if (vals.size() == 4) return {Complex{vals[0], vals[1]}, Complex{vals[2], vals[3]}};
    throw std::invalid_argument("bad point (expected re,im or re,im,re,im): " + text);
}

std::vector<double> parse_scales(const std::string& text) {
    std::vector<double> vals;
    std::istringstream ss(text);
    double v = 0.0;
    char sep = ',';
    while (ss >> v) {
        if (!(v > 0.0)) throw std::invalid_argument("scales must be > 0: " + text);
        vals.push_back(v);
        if (!(ss >> sep)) break;
        if (sep != ',') throw std::invalid_argument("bad scales list: " + text);
    }
    if (vals.size() < 2) throw std::invalid_argument("need at least 2 scales: " + text);
    return vals;
}

}  // namespace orbitacc
