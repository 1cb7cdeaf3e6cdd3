#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "orbitacc/accum.hpp"
#include "orbitacc/orbits.hpp"

namespace orbitacc {

// CSV headers are part of the external contract:
//   orbit records:  j,re1,im1,re2,im2,bdist
//   point clouds:   re1,im1,re2,im2
// Doubles are printed with %.17g so repeated runs are byte-identical.

void write_orbit_csv(std::ostream& os, const OrbitRecord& record);
void write_cloud_csv(std::ostream& os, const PointCloud& cloud);

PointCloud read_cloud_csv(std::istream& is);

nlohmann::json orbit_to_json(const OrbitRecord& record);
nlohmann::json cloud_to_json(const PointCloud& cloud);  // array of arrays
nlohmann::json clusters_to_json(const ClusterSet& set);
nlohmann::json dimension_to_json(const DimensionEstimate& est);

std::string format_double(double v);

// Small flag parsers shared by the CLI: "a:b[:step]" ranges,
// "re,im[,re,im]" points and comma-separated scale lists.
JRange parse_jrange(const std::string& text);
CPoint2 parse_point(const std::string& text);
std::vector<double> parse_scales(const std::string& text);

}  // namespace orbitacc
