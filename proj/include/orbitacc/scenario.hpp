#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitacc/accum.hpp"
#include "orbitacc/orbits.hpp"

namespace orbitacc {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// One of the paper scenarios ex11..ex24, fully parameterized: the domain
/// under study, the propagating family, the base-point grid and the
/// harvesting/fitting knobs.  Defaults are tuned so the verification
/// numbers come out well inside their tolerances under the fixed seed.
struct ScenarioConfig {
    std::string name;
    ModelDomain domain = ModelDomain::ball();  // dented domain the scenario studies
    ModelDomain harvest_domain = ModelDomain::ball();  // parent model used for
        // boundary distance and projection of orbit images
    FamilySpec family = CyclicFamily{BallMap::identity(), {0, 0, 1}};
    std::vector<CPoint2> base_points;
    double bdist_threshold = kDefaultBdistThreshold;
    std::vector<double> scales;
    double cluster_radius = 0.1;
    std::uint64_t seed = kDefaultSeed;
};

/// Builds the named scenario (ex11, ex12, ex21, ex22, ex23, ex24).
/// sample_scale multiplies the grid densities / sample counts, which is how
/// the doubling-stability property is exercised.
ScenarioConfig scenario_by_name(std::string_view name,
                                std::uint64_t seed = kDefaultSeed,
                                double sample_scale = 1.0);

const std::vector<std::string>& scenario_names();

/// A single map whose orbit exhibits the scenario's boundary accumulation
/// (the generator for cyclic scenarios, a fixed representative member for
/// psi / full).
DomainMap scenario_probe_map(std::string_view name);

struct SEstimate {
    AccumStatus status = AccumStatus::ok;
    PointCloud cloud;
    ClusterSet clusters;
    DimensionEstimate dimension;
};

/// Runs accumulation_samples, then cluster and box_counting_dimension with
/// the scenario's defaults.
SEstimate estimate_S(const ScenarioConfig& config);

}  // namespace orbitacc
