#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orbitacc/levi.hpp"
#include "orbitacc/rng.hpp"

using namespace orbitacc;

namespace {

const DefiningFunction sphere_fn = [](const CPoint2& q) { return norm_sq(q) - 1.0; };

}  // namespace

TEST_CASE("complex_hessian on reference functions") {
    const CPoint2 p{Complex{0.3, -0.2}, Complex{0.1, 0.4}};

    SUBCASE("squared norm gives the identity") {
        const HermitianForm h = complex_hessian(sphere_fn, p);
        CHECK((h.h - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-6);
    }

    SUBCASE("weighted squared norm gives diag(1, 2)") {
        const HermitianForm h = complex_hessian(
            [](const CPoint2& q) { return std::norm(q.z1) + 2.0 * std::norm(q.z2) - 1.0; }, p);
        Eigen::Matrix2cd expect = Eigen::Matrix2cd::Zero();
        expect(0, 0) = 1.0;
        expect(1, 1) = 2.0;
        CHECK((h.h - expect).cwiseAbs().maxCoeff() < 1e-6);
    }

    SUBCASE("pluriharmonic Re z1 gives zero") {
        const HermitianForm h =
            complex_hessian([](const CPoint2& q) { return q.z1.real(); }, p);
        CHECK(h.h.cwiseAbs().maxCoeff() < 1e-6);
    }

    SUBCASE("every returned form is Hermitian") {
        Rng rng(61);
        for (int k = 0; k < 20; ++k) {
            const CPoint2 q = rng.ball_point();
            const HermitianForm h = complex_hessian(
                [](const CPoint2& w) {
                    return std::norm(w.z1) * std::norm(w.z2) + (w.z1 * w.z1 * std::conj(w.z2)).real();
                },
                q);
            CHECK((h.h - h.h.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }

    SUBCASE("non-finite samples are reported with the stencil point") {
        const DefiningFunction bad = [](const CPoint2& q) {
            return std::sqrt(q.z1.real());  // NaN for Re z1 < 0
        };
        CHECK_THROWS_WITH_AS(complex_hessian(bad, CPoint2{}),
                             doctest::Contains("stencil point"), std::runtime_error);
    }
}

TEST_CASE("complex_tangent") {
    SUBCASE("sphere at (1, 0): tangent is the z2 axis") {
        const Eigen::Vector2cd v = complex_tangent(sphere_fn, CPoint2{Complex{1.0, 0.0}, {}});
        CHECK(std::abs(v(0)) < 1e-8);
        CHECK(std::abs(std::abs(v(1)) - 1.0) < 1e-12);
    }

    SUBCASE("sphere at (1,1)/sqrt(2): tangent proportional to (1, -1)") {
        const double s = 1.0 / std::sqrt(2.0);
        const Eigen::Vector2cd v =
            complex_tangent(sphere_fn, CPoint2{Complex{s, 0.0}, Complex{s, 0.0}});
        CHECK(std::abs(v(0) + v(1)) < 1e-8);
    }

    SUBCASE("orthogonality to the gradient within 1e-8") {
        Rng rng(62);
        const ModelDomain ball = ModelDomain::ball();
        for (const CPoint2& p : ball.sample_boundary(20, 63)) {
            const Eigen::Vector2cd g = complex_gradient(sphere_fn, p);
            const Eigen::Vector2cd v = complex_tangent(sphere_fn, p);
            CHECK(std::abs(g(0) * v(0) + g(1) * v(1)) < 1e-8);
        }
    }

    SUBCASE("omega_prime far from the dent matches the sphere") {
        const CPoint2 p{Complex{-0.6, 0.0}, Complex{0.0, 0.8}};
        const Eigen::Vector2cd a = complex_tangent(sphere_fn, p);
        const Eigen::Vector2cd b = complex_tangent(
            [](const CPoint2& q) { return omega_prime_value(q); }, p);
        // same direction up to phase
        CHECK(std::abs(std::abs(a.dot(b)) - 1.0) < 1e-8);
    }

    SUBCASE("vanishing gradient is rejected") {
        const DefiningFunction squared = [](const CPoint2& q) {
            const double v = norm_sq(q) - 1.0;
            return v * v;
        };
        CHECK_THROWS_AS(complex_tangent(squared, CPoint2{Complex{1.0, 0.0}, {}}),
                        std::domain_error);
    }
}

TEST_CASE("classify_boundary") {
    const ModelDomain ball = ModelDomain::ball();

    SUBCASE("sphere points are strongly pseudoconvex with Levi value 1") {
        for (const CPoint2& p : ball.sample_boundary(100, 64)) {
            const BoundaryClassification bc = classify_boundary(ball, p);
            CHECK(bc.cls == BoundaryClass::strongly_pseudoconvex);
            CHECK(bc.levi_value == doctest::Approx(1.0).epsilon(1e-4));
        }
    }

    SUBCASE("the Example 1.1 accumulation points classify strongly pseudoconvex") {
        for (double s : {1.0, -1.0}) {
            const BoundaryClassification bc =
                classify_boundary(ball, CPoint2{Complex{s, 0.0}, {}});
            CHECK(bc.cls == BoundaryClass::strongly_pseudoconvex);
            CHECK(bc.levi_value == doctest::Approx(1.0).epsilon(1e-4));
        }
    }

    SUBCASE("a saddle defining function is not pseudoconvex") {
        // f = |z2|^2 - |z1|^2 + Re z2 at the origin: gradient (0, 1/2),
        // tangent (1, 0), restricted Levi value -1.
        const DefiningFunction saddle = [](const CPoint2& q) {
            return std::norm(q.z2) - std::norm(q.z1) + q.z2.real();
        };
        const BoundaryClassification bc = classify_boundary(saddle, CPoint2{});
        CHECK(bc.cls == BoundaryClass::not_pseudoconvex);
        CHECK(bc.levi_value == doctest::Approx(-1.0).epsilon(1e-4));
    }

    SUBCASE("bidisc faces are Levi degenerate, the corner is non-smooth") {
        const ModelDomain bidisc = ModelDomain::bidisc();
        const BoundaryClassification face = classify_boundary(
            bidisc, CPoint2{std::polar(1.0, 0.4), Complex{0.3, 0.1}});
        CHECK(face.cls == BoundaryClass::levi_degenerate);
        CHECK(std::abs(face.levi_value) < 1e-6);

        const BoundaryClassification corner = classify_boundary(
            bidisc, CPoint2{std::polar(1.0, 0.4), std::polar(1.0, 1.3)});
        CHECK(corner.cls == BoundaryClass::non_smooth);
    }

    SUBCASE("classification is invariant under positive scaling of f") {
        const CPoint2 p{Complex{0.0, 1.0}, {}};
        for (double c : {0.5, 2.0, 10.0}) {
            const BoundaryClassification bc = classify_boundary(
                [c](const CPoint2& q) { return c * (norm_sq(q) - 1.0); }, p);
            CHECK(bc.cls == BoundaryClass::strongly_pseudoconvex);
            CHECK(bc.levi_value == doctest::Approx(c).epsilon(1e-4));
        }
    }

    SUBCASE("omega_prime classification away from the dent matches the sphere") {
        const ModelDomain omega = ModelDomain::omega_prime();
        const CPoint2 p{Complex{0.8, 0.0}, Complex{0.0, -0.6}};
        const BoundaryClassification bc = classify_boundary(omega, p);
        CHECK(bc.cls == BoundaryClass::strongly_pseudoconvex);
        CHECK(bc.levi_value == doctest::Approx(1.0).epsilon(1e-4));
    }
}
