#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orbitacc/orbits.hpp"
#include "orbitacc/rng.hpp"

using namespace orbitacc;

TEST_CASE("iterate_orbit: hyperbolic contraction ratio approaches 2/3") {
    const ModelDomain ball = ModelDomain::ball();
    const OrbitRecord rec =
        iterate_orbit(example11_phi(), CPoint2{}, 0, 40, ball);
    REQUIRE(rec.entries.size() == 41);
    for (size_t k = 25; k + 1 < rec.entries.size(); ++k) {
        const double ratio = rec.entries[k + 1].bdist / rec.entries[k].bdist;
        CHECK(ratio == doctest::Approx(2.0 / 3.0).epsilon(0.075));
    }
    CHECK(rec.entries[0].bdist == doctest::Approx(1.0));
}

TEST_CASE("iterate_orbit: identity map is constant and not convergent") {
    const ModelDomain ball = ModelDomain::ball();
    const CPoint2 X{Complex{0.1, 0.0}, {}};
    const OrbitRecord rec = iterate_orbit(BallMap::identity(), X, 0, 20, ball);
    for (const OrbitEntry& e : rec.entries) CHECK(dist(e.point, X) == 0.0);
    CHECK_FALSE(rec.converged);
    CHECK_FALSE(orbit_limit(rec, 10, 1e-3).has_value());
}

TEST_CASE("iterate_orbit: parabolic orbit follows the closed form 2/|j+2i|") {
    const ModelDomain ball = ModelDomain::ball();
    const CPoint2 minus1{Complex{-1.0, 0.0}, {}};
    const OrbitRecord rec = iterate_orbit(example12_phi(1), CPoint2{}, 1, 1000, ball);
    for (const OrbitEntry& e : rec.entries) {
        const double expected =
            2.0 / std::hypot(static_cast<double>(e.j), 2.0);
        CHECK(std::abs(dist(e.point, minus1) - expected) < 1e-9);
    }
}

TEST_CASE("iterate_orbit rejects points outside the domain") {
    const ModelDomain ball = ModelDomain::ball();
    CHECK_THROWS_AS(
        iterate_orbit(example11_phi(), CPoint2{Complex{1.2, 0.0}, {}}, 0, 5, ball),
        std::domain_error);
}

TEST_CASE("power-based iteration agrees with stepwise composition") {
    const ModelDomain ball = ModelDomain::ball();
    const BallMap phi = example11_phi();
    const CPoint2 X{Complex{0.2, 0.1}, Complex{-0.1, 0.15}};
    const OrbitRecord rec = iterate_orbit(phi, X, 0, 64, ball);
    CPoint2 q = X;
    for (long long j = 1; j <= 64; ++j) {
        q = phi.apply(q);
        CHECK(dist(rec.entries[static_cast<size_t>(j)].point, q) < 1e-9);
    }
}

TEST_CASE("orbit limits of the paper examples") {
    const ModelDomain ball = ModelDomain::ball();
    const CPoint2 minus1{Complex{-1.0, 0.0}, {}};
    const CPoint2 plus1{Complex{1.0, 0.0}, {}};

    SUBCASE("Example 1.1 forward orbit tends to (-1, 0)") {
        const OrbitRecord rec = iterate_orbit(example11_phi(), CPoint2{}, 0, 40, ball);
        const auto lim = orbit_limit(rec, 10, 1e-3);
        REQUIRE(lim.has_value());
        CHECK(dist(*lim, minus1) < 1e-3);
    }
    SUBCASE("Example 1.1 backward orbit tends to (1, 0)") {
        const OrbitRecord rec =
            iterate_orbit(inverse(example11_phi()), CPoint2{}, 0, 40, ball);
        const auto lim = orbit_limit(rec, 10, 1e-3);
        REQUIRE(lim.has_value());
        CHECK(dist(*lim, plus1) < 1e-3);
    }
    SUBCASE("Example 1.2 tends to (-1, 0) in both directions") {
        const OrbitRecord rec =
            iterate_orbit(example12_phi(1), CPoint2{}, -1000, 1000, ball);
        const auto back = orbit_limit(rec, 10, 1e-2);
        const auto front = orbit_limit_front(rec, 10, 1e-2);
        REQUIRE(back.has_value());
        REQUIRE(front.has_value());
        CHECK(dist(*back, minus1) < 1e-2);
        CHECK(dist(*front, minus1) < 1e-2);
    }
}

TEST_CASE("convergence verdicts are stable under doubling the tail") {
    const ModelDomain ball = ModelDomain::ball();
    const OrbitRecord rec = iterate_orbit(example11_phi(), CPoint2{}, 0, 40, ball);
    CHECK(orbit_limit(rec, 10, 1e-3).has_value() == orbit_limit(rec, 20, 1e-3).has_value());
    const OrbitRecord id = iterate_orbit(BallMap::identity(), CPoint2{}, 0, 40, ball);
    CHECK(orbit_limit(id, 10, 1e-3).has_value() == orbit_limit(id, 20, 1e-3).has_value());
}

TEST_CASE("orbit points never leave the model domains") {
    const ModelDomain ball = ModelDomain::ball();
    const ModelDomain bidisc = ModelDomain::bidisc();
    Rng rng(41);
    for (int k = 0; k < 5; ++k) {
        const CPoint2 Xb = rng.ball_point();
        for (const OrbitEntry& e :
             iterate_orbit(example11_phi(), Xb, -30, 30, ball).entries)
            CHECK(norm_sq(e.point) < 1.0 + 1e-12);
        const CPoint2 Xd = rng.bidisc_point();
        for (const OrbitEntry& e :
             iterate_orbit(mu(1), Xd, -30, 30, bidisc).entries)
            CHECK(sup_mod(e.point) < 1.0 + 1e-12);
    }
}

TEST_CASE("family_member enumerates valid automorphisms") {
    SUBCASE("psi grid decodes to in-range parameters") {
        PsiFamily fam;
        fam.j_abs_lo = 2;
        fam.j_abs_hi = 4;
        fam.num_args = 8;
        fam.moduli = {0.3, 0.7};
        const size_t n = family_size(fam);
        CHECK(n == 3 * 2 * 8 * 2);
        Rng rng(43);
        for (size_t m = 0; m < n; ++m) {
            const DomainMap g = family_member(FamilySpec{fam}, m);
            const CPoint2 image = map_apply(g, rng.bidisc_point());
            CHECK(sup_mod(image) < 1.0);
        }
    }
    SUBCASE("full bidisc sampler is deterministic and automorphic") {
        FullBidiscFamily fam;
        fam.count = 200;
        fam.seed = 7;
        Rng rng(44);
        for (size_t m = 0; m < fam.count; ++m) {
            const DomainMap g = family_member(FamilySpec{fam}, m);
            const DomainMap g2 = family_member(FamilySpec{fam}, m);
            const CPoint2 z = rng.bidisc_point();
            CHECK(dist(map_apply(g, z), map_apply(g2, z)) == 0.0);
            CHECK(sup_mod(map_apply(g, z)) < 1.0);
        }
    }
}

TEST_CASE("accumulation_samples: Example 1.1 projections sit at (+-1, 0)") {
    const ModelDomain ball = ModelDomain::ball();
    const CPoint2 base{};
    const CyclicFamily fam{example11_phi(), {-60, 60, 1}};
    const AccumResult res = accumulation_samples(FamilySpec{fam}, {&base, 1}, ball, 1e-3);
    REQUIRE(res.status == AccumStatus::ok);
    CHECK(res.cloud.size() > 50);
    for (const Real4& p : res.cloud.points) {
        const double to_plus = dist(p, Real4{1.0, 0.0, 0.0, 0.0});
        const double to_minus = dist(p, Real4{-1.0, 0.0, 0.0, 0.0});
        CHECK(std::min(to_plus, to_minus) < 1e-6);
    }
}

TEST_CASE("accumulation_samples: psi family fills the circles densely") {
    const ModelDomain bidisc = ModelDomain::bidisc();
    const CPoint2 base{};
    PsiFamily fam;
    fam.j_abs_lo = 30;
    fam.j_abs_hi = 60;
    fam.num_args = 32;
    const AccumResult res = accumulation_samples(FamilySpec{fam}, {&base, 1}, bidisc, 1e-3);
    REQUIRE(res.status == AccumStatus::ok);
    std::vector<double> args_plus, args_minus;
    for (const Real4& p : res.cloud.points) {
        // Points lie on {+-1} x boundary circle.
        CHECK(std::abs(std::abs(Complex{p[0], p[1]}) - 1.0) < 1e-9);
        CHECK(std::abs(p[1]) < 1e-6);
        CHECK(std::abs(std::abs(Complex{p[2], p[3]}) - 1.0) < 1e-6);
        (p[0] > 0 ? args_plus : args_minus).push_back(std::atan2(p[3], p[2]));
    }
    // Dense fill: the 32-argument grid leaves no angular gap above ~2pi/32
    // on either circle.
    for (auto* args : {&args_plus, &args_minus}) {
        REQUIRE(args->size() > 32);
        std::sort(args->begin(), args->end());
        double max_gap = 2.0 * M_PI - (args->back() - args->front());
        for (size_t k = 0; k + 1 < args->size(); ++k)
            max_gap = std::max(max_gap, (*args)[k + 1] - (*args)[k]);
        CHECK(max_gap < 2.0 * M_PI / 32.0 + 0.05);
    }
}

TEST_CASE("accumulation_samples: mu family fills {+-1} x D over a base grid") {
    const ModelDomain bidisc = ModelDomain::bidisc();
    std::vector<CPoint2> bases;
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b) {
            const Complex z2{-0.9 + 1.8 * a / 19.0, -0.9 + 1.8 * b / 19.0};
            if (std::abs(z2) < 1.0) bases.push_back({Complex{0.0, 0.0}, z2});
        }
    const MuFamily fam{{-60, 60, 20}};
    const AccumResult res = accumulation_samples(FamilySpec{fam}, bases, bidisc, 1e-3);
    REQUIRE(res.status == AccumStatus::ok);
    size_t on_sheets = 0;
    bool covered[2][6][6] = {};
    for (const Real4& p : res.cloud.points) {
        if (std::abs(std::abs(p[0]) - 1.0) < 1e-9 && std::abs(p[1]) < 1e-9) ++on_sheets;
        const int side = p[0] > 0 ? 0 : 1;
        const int cu = std::min(5, static_cast<int>((p[2] + 0.9) / 0.3));
        const int cv = std::min(5, static_cast<int>((p[3] + 0.9) / 0.3));
        if (cu >= 0 && cv >= 0) covered[side][cu][cv] = true;
    }
    CHECK(on_sheets == res.cloud.size());
    // Every coarse cell of both sheets that meets the disc is hit.
    for (int side = 0; side < 2; ++side)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                const Complex center{-0.9 + 0.3 * a + 0.15, -0.9 + 0.3 * b + 0.15};
                if (std::abs(center) < 0.8) CHECK(covered[side][a][b]);
            }
}

TEST_CASE("accumulation_samples: empty harvest is a status, not an error") {
    const ModelDomain ball = ModelDomain::ball();
    const CPoint2 base{};
    const CyclicFamily fam{example11_phi(), {-2, 2, 1}};
    const AccumResult res = accumulation_samples(FamilySpec{fam}, {&base, 1}, ball, 1e-12);
    CHECK(res.status == AccumStatus::no_accumulation);
    CHECK(res.cloud.empty());
}

TEST_CASE("accumulation_samples is deterministic across runs") {
    const ModelDomain bidisc = ModelDomain::bidisc();
    const CPoint2 base{};
    FullBidiscFamily fam;
    fam.count = 20000;
    fam.seed = 5;
    const AccumResult a = accumulation_samples(FamilySpec{fam}, {&base, 1}, bidisc, 1e-3);
    const AccumResult b = accumulation_samples(FamilySpec{fam}, {&base, 1}, bidisc, 1e-3);
    REQUIRE(a.cloud.size() == b.cloud.size());
    for (size_t k = 0; k < a.cloud.size(); ++k)
        CHECK(a.cloud.points[k] == b.cloud.points[k]);
}

TEST_CASE("uniformity_check exhibits uniform convergence on compacta") {
    const CPoint2 minus1{Complex{-1.0, 0.0}, {}};
    const DomainMap phi = example11_phi();

    // The z2 direction contracts at sqrt(2/3) per step, so the sup over the
    // 4-dimensional compact ball decays at that rate; j = 80 is well below
    // 1e-4 while j = 40 is only ~3e-4.
    const double at40 = uniformity_check(phi, minus1, 0.5, 40);
    const double at80 = uniformity_check(phi, minus1, 0.5, 80);
    CHECK(at40 < 1e-3);
    CHECK(at80 < 1e-4);

    SUBCASE("identity family does not converge") {
        const DomainMap id = BallMap::identity();
        const double a = uniformity_check(id, minus1, 0.5, 10);
        const double b = uniformity_check(id, minus1, 0.5, 20);
        CHECK(a == b);
        CHECK(a > 0.5);
    }

    SUBCASE("sup decays monotonically in j") {
        double prev = uniformity_check(phi, minus1, 0.5, 10);
        for (long long j = 15; j <= 45; j += 5) {
            const double cur = uniformity_check(phi, minus1, 0.5, j);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("Cartan direction: scenarios reach the boundary by |j| = 40") {
    const ModelDomain ball = ModelDomain::ball();
    const ModelDomain bidisc = ModelDomain::bidisc();
    const std::vector<std::pair<DomainMap, const ModelDomain*>> probes = {
        {example11_phi(), &ball},
        {example12_phi(1), &ball},
        {BidiscMap{lambda_map(), lambda_map(), false}, &bidisc},
    };
    for (const auto& [map, domain] : probes) {
        double best = 1.0;
        for (long long j = -40; j <= 40; ++j)
            best = std::min(best,
                            domain->boundary_distance(map_apply(map_power(map, j), CPoint2{})));
        CHECK(best < 1e-2);
    }
}
