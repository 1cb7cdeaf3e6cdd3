#include "orbitacc/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <iomanip>

#include "orbitacc/levi.hpp"
#include "orbitacc/rng.hpp"
#include "orbitacc/scenario.hpp"

namespace orbitacc::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Harness {
  public:
    explicit Harness(const Expectations& exp) : exp_(exp) {}

    void row(std::string name, double expected, double observed, double tol,
             Cmp cmp = Cmp::abs_diff) {
        CheckRow r{std::move(name), expected, observed, tol, false, cmp};
        r.pass = cmp == Cmp::abs_diff ? std::abs(observed - expected) <= tol
                                      : observed < expected;
        report_.checks.push_back(std::move(r));
    }

    template <typename Fn>
    void criterion(const std::string& name, double budget, Fn&& fn) {
        const auto t0 = Clock::now();
        fn();
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report_.timings.push_back({name, secs, budget, secs < budget});
    }

    VerifyReport finish() {
        report_.numeric_overall = true;
        for (const CheckRow& r : report_.checks)
            report_.numeric_overall = report_.numeric_overall && r.pass;
        report_.runtime_overall = true;
        for (const CriterionTiming& t : report_.timings)
            report_.runtime_overall = report_.runtime_overall && t.pass;
        return std::move(report_);
    }

    const Expectations& exp() const { return exp_; }

  private:
    Expectations exp_;
    VerifyReport report_;
};

// --- criterion 1: Example 1.2 group law ------------------------------------

void check_group_law(Harness& h) {
    Rng rng(1);
    std::vector<CPoint2> samples;
    for (int k = 0; k < 10; ++k) samples.push_back(rng.ball_point());
    std::vector<BallMap> phis;
    for (long long j = -40; j <= 40; ++j) phis.push_back(example12_phi(j));
    const auto phi = [&](long long j) -> const BallMap& { return phis[static_cast<size_t>(j + 40)]; };
    double worst = 0.0;
    for (long long j = -20; j <= 20; ++j)
        for (long long k = -20; k <= 20; ++k)
            for (const CPoint2& z : samples) {
                const CPoint2 a = phi(j).apply(phi(k).apply(z));
                const CPoint2 b = phi(j + k).apply(z);
                worst = std::max(worst, dist(a, b));
            }
    h.row("c1_group_law_max_dev", 0.0, worst, h.exp().group_law_tol);
}

// --- criterion 2: Example 1.1 hyperbolic limits -----------------------------

void check_hyperbolic(Harness& h) {
    const BallMap phi = example11_phi();
    const CPoint2 origin{};
    const CPoint2 minus1{Complex{-1.0, 0.0}, {}};
    const CPoint2 plus1{Complex{1.0, 0.0}, {}};
    const CPoint2 fwd = power(phi, 25).apply(origin);
    const CPoint2 bwd = power(phi, -25).apply(origin);
    h.row("c2_forward_limit_dist", 0.0, dist(fwd, minus1), h.exp().hyperbolic_limit_tol);
    h.row("c2_backward_limit_dist", 0.0, dist(bwd, plus1), h.exp().hyperbolic_limit_tol);

    double ratio_sum = 0.0;
    int n = 0;
    double prev = 1.0 - norm(power(phi, 20).apply(origin));
    for (long long j = 21; j <= 30; ++j) {
        const double cur = 1.0 - norm(power(phi, j).apply(origin));
        ratio_sum += cur / prev;
        prev = cur;
        ++n;
    }
    h.row("c2_contraction_ratio", h.exp().contraction_ratio, ratio_sum / n,
          h.exp().contraction_ratio_tol);
}

// --- criterion 3: Example 1.2 parabolic limit --------------------------------

void check_parabolic(Harness& h) {
    const CPoint2 origin{};
    const CPoint2 minus1{Complex{-1.0, 0.0}, {}};
    for (long long jmag : {100LL, 1000LL}) {
        double worst = dist(example12_phi(jmag).apply(origin), minus1);
        const double expected = h.exp().parabolic_scale / static_cast<double>(jmag);
        const double other = dist(example12_phi(-jmag).apply(origin), minus1);
        if (std::abs(other - expected) > std::abs(worst - expected)) worst = other;
        h.row("c3_parabolic_dist_j" + std::to_string(jmag), expected, worst,
              h.exp().parabolic_tol_scale / static_cast<double>(jmag));
    }
}

// --- criterion 4: Siegel translation -----------------------------------------

void check_translation(Harness& h) {
    const std::vector<CPoint2> probes = default_translation_probes();
    double worst = 0.0;
    for (long long j = -10; j <= 10; ++j) {
        const BallMap fj = example12_phi(j);
        for (const CPoint2& p : probes) {
            const SiegelPoint w = cayley_to_siegel(p);
            const SiegelPoint tw = cayley_to_siegel(fj.apply(p));
            const Complex d1 = tw.w1 - (w.w1 + Complex{static_cast<double>(j), 0.0});
            const Complex d2 = tw.w2 - w.w2;
            worst = std::max(worst, std::sqrt(std::norm(d1) + std::norm(d2)));
        }
    }
    h.row("c4_translation_max_dev", 0.0, worst, h.exp().translation_tol);
}

// --- criterion 5: cardinality of S(Omega) ------------------------------------

double center_match_error(const ClusterSet& set, const std::vector<Real4>& targets) {
    double worst = 0.0;
    for (const Real4& t : targets) {
        double best = std::numeric_limits<double>::infinity();
        for (const Cluster& c : set.clusters) best = std::min(best, dist(c.center, t));
        worst = std::max(worst, best);
    }
    return worst;
}

void check_cardinality(Harness& h) {
    const SEstimate ex11 = estimate_S(scenario_by_name("ex11"));
    h.row("c5_ex11_clusters", h.exp().ex11_clusters,
          static_cast<double>(ex11.clusters.clusters.size()), 0.0);
    h.row("c5_ex11_center_err", 0.0,
          center_match_error(ex11.clusters, {{1.0, 0.0, 0.0, 0.0}, {-1.0, 0.0, 0.0, 0.0}}),
          h.exp().cluster_center_tol);

    const SEstimate ex12 = estimate_S(scenario_by_name("ex12"));
    h.row("c5_ex12_clusters", h.exp().ex12_clusters,
          static_cast<double>(ex12.clusters.clusters.size()), 0.0);
    h.row("c5_ex12_center_err", 0.0,
          center_match_error(ex12.clusters, {{-1.0, 0.0, 0.0, 0.0}}),
          h.exp().cluster_center_tol);
}

// --- criterion 6: dimensions of S for the bidisc examples --------------------

void check_dimensions(Harness& h) {
    const char* names[4] = {"ex21", "ex22", "ex23", "ex24"};
    for (int k = 0; k < 4; ++k) {
        const SEstimate est = estimate_S(scenario_by_name(names[k]));
        h.row(std::string("c6_") + names[k] + "_slope", h.exp().slope_expected[k],
              est.dimension.slope, h.exp().slope_tol[k]);
        if (k > 0)
            h.row(std::string("c6_") + names[k] + "_r2", 1.0, est.dimension.r2,
                  h.exp().r2_tol);
    }
}

// --- criterion 7: automorphy suite -------------------------------------------

void check_automorphy(Harness& h) {
    Rng rng(7);
    double interior_worst = 0.0;
    double boundary_worst = 0.0;

    std::vector<DiscMap> disc_maps = {
        disc_mobius(Complex{0.3, 0.2}, 0.7), disc_mobius(Complex{-0.5, 0.0}, 0.0),
        lambda_map(), power(lambda_map(), 7),
        disc_mobius(std::polar(0.9, 1.1), 2.0)};
    for (int k = 0; k < 1000; ++k) {
        const DiscMap& f = disc_maps[static_cast<size_t>(k) % disc_maps.size()];
        interior_worst = std::max(interior_worst, std::abs(f.apply(rng.unit_disc())));
        const double theta = 2.0 * M_PI * k / 1000.0;
        boundary_worst = std::max(boundary_worst,
                                  std::abs(std::abs(f.apply(std::polar(1.0, theta))) - 1.0));
    }

    std::vector<BallMap> ball_maps = {
        example11_phi(), power(example11_phi(), 5), example12_phi(1),
        example12_phi(7), example12_phi(-3),
        compose(example11_phi(), example12_phi(2))};
    for (int k = 0; k < 1000; ++k) {
        const BallMap& f = ball_maps[static_cast<size_t>(k) % ball_maps.size()];
        interior_worst = std::max(interior_worst, norm(f.apply(rng.ball_point())));
        CPoint2 s = rng.ball_point();
        const double r = norm(s);
        if (r < 1e-3) continue;
        s = {s.z1 / r, s.z2 / r};
        boundary_worst = std::max(boundary_worst, std::abs(norm(f.apply(s)) - 1.0));
    }

    std::vector<BidiscMap> bidisc_maps = {
        BidiscMap{lambda_map(), lambda_map(), false}, psi(3, Complex{0.0, 0.4}),
        mu(5), BidiscMap{disc_mobius(Complex{0.2, -0.1}, 0.3),
                         disc_mobius(Complex{-0.4, 0.25}, 1.2), true}};
    for (int k = 0; k < 1000; ++k) {
        const BidiscMap& f = bidisc_maps[static_cast<size_t>(k) % bidisc_maps.size()];
        interior_worst = std::max(interior_worst, sup_mod(f.apply(rng.bidisc_point())));
        CPoint2 s = rng.bidisc_point();
        const double m = sup_mod(s);
        if (m < 1e-3) continue;
        s = {s.z1 / m, s.z2 / m};
        boundary_worst = std::max(boundary_worst, std::abs(sup_mod(f.apply(s)) - 1.0));
    }

    h.row("c7_interior_max_norm", 1.0, interior_worst, 0.0, Cmp::less_than);
    h.row("c7_boundary_max_dev", 0.0, boundary_worst, h.exp().automorphy_boundary_tol);
}

// --- criterion 8: Levi suite --------------------------------------------------

void check_levi(Harness& h) {
    const ModelDomain ball = ModelDomain::ball();
    const std::vector<CPoint2> samples = ball.sample_boundary(100, 8);
    double value_worst = 0.0;
    double class_errors = 0.0;
    for (const CPoint2& p : samples) {
        const BoundaryClassification bc = classify_boundary(ball, p);
        value_worst = std::max(value_worst, std::abs(bc.levi_value - 1.0));
        if (bc.cls != BoundaryClass::strongly_pseudoconvex) class_errors += 1.0;
    }
    h.row("c8_sphere_class_errors", 0.0, class_errors, 0.0);
    h.row("c8_levi_value_max_err", 0.0, value_worst, h.exp().levi_value_tol);

    struct Case {
        DefiningFunction f;
        std::function<Eigen::Matrix2cd(const CPoint2&)> analytic;
    };
    const std::vector<Case> corpus = {
        {[](const CPoint2& q) { return norm_sq(q) - 1.0; },
         [](const CPoint2&) { return Eigen::Matrix2cd::Identity().eval(); }},
        {[](const CPoint2& q) { return std::norm(q.z1) + 2.0 * std::norm(q.z2) - 1.0; },
         [](const CPoint2&) {
             Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
             m(0, 0) = 1.0;
             m(1, 1) = 2.0;
             return m;
         }},
        {[](const CPoint2& q) { return q.z1.real(); },
         [](const CPoint2&) { return Eigen::Matrix2cd::Zero().eval(); }},
        {[](const CPoint2& q) { return std::norm(q.z1) * std::norm(q.z2); },
         [](const CPoint2& q) {
             Eigen::Matrix2cd m;
             m(0, 0) = std::norm(q.z2);
             m(0, 1) = std::conj(q.z1) * q.z2;
             m(1, 0) = q.z1 * std::conj(q.z2);
             m(1, 1) = std::norm(q.z1);
             return m;
         }},
        {[](const CPoint2& q) { return std::norm(q.z1) * std::norm(q.z1); },
         [](const CPoint2& q) {
             Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
             m(0, 0) = 4.0 * std::norm(q.z1);
             return m;
         }},
        {[](const CPoint2& q) { return (q.z1 * q.z1 * std::conj(q.z2)).real(); },
         [](const CPoint2& q) {
             Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
             m(0, 1) = q.z1;
             m(1, 0) = std::conj(q.z1);
             return m;
         }},
    };
    Rng rng(9);
    double hess_worst = 0.0;
    for (const Case& c : corpus)
        for (int k = 0; k < 5; ++k) {
            const CPoint2 p = rng.ball_point();
            const HermitianForm fd = complex_hessian(c.f, p);
            hess_worst = std::max(hess_worst, (fd.h - c.analytic(p)).cwiseAbs().maxCoeff());
        }
    h.row("c8_hessian_max_err", 0.0, hess_worst, h.exp().hessian_tol);
}

// --- criterion 9: Omega membership invariance ---------------------------------

void check_invariance(Harness& h) {
    const BallMap phi = example11_phi();
    Rng rng(11);
    double mismatches = 0.0;
    double inconclusive = 0.0;
    for (int k = 0; k < 100; ++k) {
        const CPoint2 p = rng.ball_point();
        const Containment a = omega_contains_ex(p, phi, 200);
        const Containment b = omega_contains_ex(phi.apply(p), phi, 200);
        if (a == Containment::inconclusive) inconclusive += 1.0;
        if (b == Containment::inconclusive) inconclusive += 1.0;
        if (a != b) mismatches += 1.0;
    }
    h.row("c9_invariance_mismatches", 0.0, mismatches, 0.0);
    h.row("c9_inconclusive_count", 0.0, inconclusive, 0.0);
}

// --- criterion 10: Cartan semantics -------------------------------------------

void check_cartan(Harness& h) {
    double worst_min = 0.0;
    for (const std::string& name : scenario_names()) {
        const DomainMap probe = scenario_probe_map(name);
        const ModelDomain model = std::holds_alternative<BallMap>(probe)
                                      ? ModelDomain::ball()
                                      : ModelDomain::bidisc();
        double best = std::numeric_limits<double>::infinity();
        const CPoint2 origin{};
        for (long long j = -40; j <= 40; ++j) {
            const CPoint2 p = map_apply(map_power(probe, j), origin);
            best = std::min(best, model.boundary_distance(p));
        }
        worst_min = std::max(worst_min, best);
    }
    h.row("c10_orbit_min_bdist", h.exp().cartan_bdist, worst_min, 0.0, Cmp::less_than);
}

}  // namespace

VerifyReport run_verification(const Expectations& exp) {
    Harness h(exp);
    h.criterion("c1_group_law", exp.budget_group_law, [&] { check_group_law(h); });
    h.criterion("c2_hyperbolic_limits", exp.budget_hyperbolic, [&] { check_hyperbolic(h); });
    h.criterion("c3_parabolic_limit", exp.budget_parabolic, [&] { check_parabolic(h); });
    h.criterion("c4_siegel_translation", exp.budget_translation, [&] { check_translation(h); });
    h.criterion("c5_cardinality", exp.budget_cardinality, [&] { check_cardinality(h); });
    h.criterion("c6_dimensions", exp.budget_dimensions, [&] { check_dimensions(h); });
    h.criterion("c7_automorphy", exp.budget_automorphy, [&] { check_automorphy(h); });
    h.criterion("c8_levi", exp.budget_levi, [&] { check_levi(h); });
    h.criterion("c9_invariance", exp.budget_invariance, [&] { check_invariance(h); });
    h.criterion("c10_cartan", exp.budget_cartan, [&] { check_cartan(h); });
    return h.finish();
}

std::string format_table(const VerifyReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(28) << "check" << std::setw(14) << "expected"
       << std::setw(14) << "observed" << std::setw(12) << "tolerance"
       << "result\n";
    for (const CheckRow& r : report.checks) {
        os << std::left << std::setw(28) << r.name << std::setw(14)
           << std::setprecision(6) << std::defaultfloat << r.expected << std::setw(14) << r.observed
           << std::setw(12) << r.tolerance << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    os << "overall: " << (report.numeric_overall ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string format_timings(const VerifyReport& report) {
    std::ostringstream os;
    for (const CriterionTiming& t : report.timings)
        os << std::left << std::setw(24) << t.name << std::fixed << std::setprecision(3)
           << t.seconds << " s (budget " << t.budget << " s) "
           << (t.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace orbitacc::verify
