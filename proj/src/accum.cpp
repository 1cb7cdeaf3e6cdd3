#include "orbitacc/accum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <unordered_set>

namespace orbitacc {

ClusterSet cluster(const PointCloud& cloud, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("cluster: radius must be > 0");
    ClusterSet set;
    std::vector<std::uint32_t> assignment(cloud.size());
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        const Real4& p = cloud.points[i];
        bool placed = false;
        for (size_t c = 0; c < set.clusters.size(); ++c) {
            Cluster& cl = set.clusters[c];
            if (dist(p, cl.center) <= radius) {
                ++cl.count;
                const double w = 1.0 / static_cast<double>(cl.count);
                for (int k = 0; k < 4; ++k)
                    cl.center[k] += (p[k] - cl.center[k]) * w;
                assignment[i] = static_cast<std::uint32_t>(c);
                placed = true;
                break;
            }
        }
        if (!placed) {
            assignment[i] = static_cast<std::uint32_t>(set.clusters.size());
            set.clusters.push_back(Cluster{p, 1, 0.0});
        }
    }
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        Cluster& cl = set.clusters[assignment[i]];
        const double d = dist(cloud.points[i], cl.center);
        cl.radius = std::max(cl.radius, d);
        if (d > radius) ++set.unassigned;
    }
    return set;
}

namespace {

size_t count_boxes(const std::vector<Real4>& points, double eps) {
    std::unordered_set<std::uint64_t> boxes;
    boxes.reserve(points.size());
    for (const Real4& p : points) {
        std::uint64_t key = 0;
        for (int k = 0; k < 4; ++k) {
            const double idx = std::floor(p[k] / eps);
            if (!(idx >= -30000.0 && idx <= 30000.0))
                throw std::invalid_argument("box_counting_dimension: coordinate out of range");
            key = (key << 16) | static_cast<std::uint64_t>(
                                    static_cast<std::int64_t>(idx) + 32768);
        }
        boxes.insert(key);
    }
    return boxes.size();
}

}  // namespace

std::vector<double> default_scales() {
    return {0.125, 0.0625, 0.03125, 0.015625, 0.0078125};
}

DimensionEstimate box_counting_dimension(const PointCloud& cloud,
                                         std::span<const double> eps_list) {
    if (eps_list.size() < 2)
        throw std::invalid_argument("box_counting_dimension: need at least 2 scales");
    for (double e : eps_list)
        if (!(e > 0.0))
            throw std::invalid_argument("box_counting_dimension: scales must be > 0");

    std::vector<double> eps(eps_list.begin(), eps_list.end());
    std::sort(eps.begin(), eps.end(), std::greater<>());

    std::vector<std::future<size_t>> jobs;
    jobs.reserve(eps.size());
    for (double e : eps)
        jobs.push_back(std::async(std::launch::async,
                                  [&points = cloud.points, e] { return count_boxes(points, e); }));

    DimensionEstimate est;
    est.scales.reserve(eps.size());
    for (size_t k = 0; k < eps.size(); ++k)
        est.scales.push_back({eps[k], jobs[k].get()});

    for (size_t k = 1; k < est.scales.size(); ++k)
        if (est.scales[k].count < est.scales[k - 1].count)
            throw std::logic_error("box_counting_dimension: counts decreased at a finer scale");

    bool all_equal = true;
    for (const ScaleCount& sc : est.scales)
        all_equal = all_equal && sc.count == est.scales.front().count;
    if (all_equal || cloud.empty()) {
        est.slope = 0.0;
        est.r2 = 0.0;
        est.degenerate = true;
        return est;
    }

    // Least squares of y = log N against x = log(1/eps).
    const double n = static_cast<double>(est.scales.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const ScaleCount& sc : est.scales) {
        const double x = std::log(1.0 / sc.eps);
        const double y = std::log(static_cast<double>(sc.count));
        sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
    }
    const double cov = sxy - sx * sy / n;
    const double var_x = sxx - sx * sx / n;
    const double var_y = syy - sy * sy / n;
    est.slope = cov / var_x;
    double ss_res = 0.0;
    const double intercept = (sy - est.slope * sx) / n;
    for (const ScaleCount& sc : est.scales) {
        const double x = std::log(1.0 / sc.eps);
        const double y = std::log(static_cast<double>(sc.count));
        const double r = y - (est.slope * x + intercept);
        ss_res += r * r;
    }
    est.r2 = var_y > 0.0 ? 1.0 - ss_res / var_y : 0.0;
    return est;
}

}  // namespace orbitacc
