#include "orbitacc/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitacc/rng.hpp"

namespace orbitacc {

namespace {

std::vector<double> scales_pow2(int hi, int lo) {
    std::vector<double> s;
    for (int k = hi; k <= lo; ++k) s.push_back(std::pow(2.0, -k));
    return s;
}

std::vector<CPoint2> mu_base_grid(size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CPoint2> bases;
    bases.reserve(n);
    for (size_t k = 0; k < n; ++k)
        bases.push_back({Complex{0.0, 0.0}, rng.unit_disc()});
    return bases;
}

size_t scaled(size_t n, double f) {
    return std::max<size_t>(1, static_cast<size_t>(std::llround(static_cast<double>(n) * f)));
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"ex11", "ex12", "ex21",
                                                   "ex22", "ex23", "ex24"};
    return names;
}

ScenarioConfig scenario_by_name(std::string_view name, std::uint64_t seed,
                                double sample_scale) {
    ScenarioConfig cfg;
    cfg.name = std::string(name);
    cfg.seed = seed;
    const CPoint2 origin{};

    if (name == "ex11") {
        cfg.domain = ModelDomain::dented_ball(FamilyTag::ex11);
        cfg.harvest_domain = ModelDomain::ball();
        const long long span = static_cast<long long>(scaled(80, sample_scale));
        cfg.family = CyclicFamily{example11_phi(), {-span, span, 1}};
        cfg.base_points = {origin};
        cfg.scales = scales_pow2(2, 6);
    } else if (name == "ex12") {
        cfg.domain = ModelDomain::dented_ball(FamilyTag::ex12);
        cfg.harvest_domain = ModelDomain::ball();
        const long long span = static_cast<long long>(scaled(1000, sample_scale));
        cfg.family = CyclicFamily{example12_phi(1), {-span, span, 1}};
        cfg.base_points = {origin};
        cfg.scales = scales_pow2(2, 6);
    } else if (name == "ex21") {
        cfg.domain = ModelDomain::dented_bidisc(FamilyTag::cyclic);
        cfg.harvest_domain = ModelDomain::bidisc();
        const long long span = static_cast<long long>(scaled(80, sample_scale));
        cfg.family = CyclicFamily{BidiscMap{lambda_map(), lambda_map(), false},
                                  {-span, span, 1}};
        cfg.base_points = {origin};
        cfg.scales = scales_pow2(2, 6);
    } else if (name == "ex22") {
        cfg.domain = ModelDomain::dented_bidisc(FamilyTag::psi);
        cfg.harvest_domain = ModelDomain::bidisc();
        PsiFamily fam;
        fam.j_abs_lo = 30;
        fam.j_abs_hi = 44;
        fam.num_args = scaled(4096, sample_scale);
        fam.moduli = {0.3, 0.5, 0.7, 0.9};
        cfg.family = fam;
        cfg.base_points = {origin};
        cfg.scales = scales_pow2(3, 7);
    } else if (name == "ex23") {
        cfg.domain = ModelDomain::dented_bidisc(FamilyTag::mu);
        cfg.harvest_domain = ModelDomain::bidisc();
        cfg.family = MuFamily{{-40, 40, 10}};
        cfg.base_points = mu_base_grid(scaled(120000, sample_scale), seed);
        cfg.scales = scales_pow2(3, 6);
        cfg.cluster_radius = 0.5;
    } else if (name == "ex24") {
        cfg.domain = ModelDomain::dented_bidisc(FamilyTag::full);
        cfg.harvest_domain = ModelDomain::bidisc();
        FullBidiscFamily fam;
        fam.count = scaled(2000000, sample_scale);
        fam.seed = seed;
        fam.near_boundary_delta = 5e-4;
        cfg.family = fam;
        cfg.base_points = {origin};
        cfg.scales = scales_pow2(1, 4);
        cfg.cluster_radius = 1.0;
    } else {
        throw std::invalid_argument("unknown scenario: " + std::string(name));
    }
    return cfg;
}

DomainMap scenario_probe_map(std::string_view name) {
    if (name == "ex11") return example11_phi();
    if (name == "ex12") return example12_phi(1);
    if (name == "ex21" || name == "ex24")
        return BidiscMap{lambda_map(), lambda_map(), false};
    if (name == "ex22") return psi(1, Complex{0.5, 0.0});
    if (name == "ex23") return mu(1);
    throw std::invalid_argument("unknown scenario: " + std::string(name));
}

SEstimate estimate_S(const ScenarioConfig& config) {
    SEstimate est;
    AccumResult acc = accumulation_samples(config.family, config.base_points,
                                           config.harvest_domain, config.bdist_threshold);
    est.status = acc.status;
    est.cloud = std::move(acc.cloud);
    est.cloud.provenance = config.name;
    if (est.status == AccumStatus::no_accumulation) return est;
    est.clusters = cluster(est.cloud, config.cluster_radius);
    est.dimension = box_counting_dimension(est.cloud, config.scales);
    return est;
}

}  // namespace orbitacc
