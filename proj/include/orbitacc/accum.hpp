#pragma once

#include <span>
#include <string>
#include <vector>

#include "orbitacc/point.hpp"

namespace orbitacc {

/// Near-boundary accumulation samples, stored as (Re z1, Im z1, Re z2, Im z2)
/// rows.  Points are boundary projections, so they sit on the relevant model
/// boundary to within round-off.
struct PointCloud {
    std::vector<Real4> points;
    std::string provenance;

    size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

struct Cluster {
    Real4 center{};
    size_t count = 0;
    double radius = 0.0;  // max member distance to the final center
};

struct ClusterSet {
    std::vector<Cluster> clusters;
    size_t unassigned = 0;  // members that drifted beyond `radius` of their
                            // final center (0 for well-separated data)
};

/// Greedy leader clustering in deterministic input order: each point joins
/// the first center within `radius` (centers are running means) or founds a
/// new cluster.
ClusterSet cluster(const PointCloud& cloud, double radius);

struct ScaleCount {
    double eps = 0.0;
    size_t count = 0;
};

struct DimensionEstimate {
    double slope = 0.0;
    double r2 = 0.0;  // 0 when the fit is degenerate (all counts equal)
    std::vector<ScaleCount> scales;
    bool degenerate = false;
};

/// Box-counting dimension: counts occupied half-open axis-aligned boxes
/// [k*eps, (k+1)*eps)^4 per scale and fits log N against log(1/eps).
DimensionEstimate box_counting_dimension(const PointCloud& cloud,
                                         std::span<const double> eps_list);

/// Default scale ladder 2^-3 .. 2^-7.
std::vector<double> default_scales();

}  // namespace orbitacc
