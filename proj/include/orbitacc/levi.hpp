#pragma once

#include <Eigen/Dense>
#include <functional>

#include "orbitacc/domains.hpp"
#include "orbitacc/point.hpp"

namespace orbitacc {

using DefiningFunction = std::function<double(const CPoint2&)>;

/// Complex Hessian (d^2 f / dz_j dzbar_k), Hermitian-symmetrized.
struct HermitianForm {
    Eigen::Matrix2cd h;
};

enum class BoundaryClass {
    strongly_pseudoconvex,
    levi_degenerate,
    not_pseudoconvex,
    non_smooth,
};

struct BoundaryClassification {
    BoundaryClass cls = BoundaryClass::levi_degenerate;
    double levi_value = 0.0;
};

const char* to_string(BoundaryClass cls);

inline constexpr double kHessianStep = 1e-4;
inline constexpr double kGradientStep = 1e-5;
inline constexpr double kLeviTolerance = 1e-3;

/// Central finite differences in the four real coordinates, combined into
/// the complex Hessian.  Throws (naming the stencil point) when f produces
/// a non-finite sample.
HermitianForm complex_hessian(const DefiningFunction& f, const CPoint2& p,
                              double step = kHessianStep);

/// Holomorphic gradient (df/dz1, df/dz2) by central differences.
Eigen::Vector2cd complex_gradient(const DefiningFunction& f, const CPoint2& p,
                                  double step = kGradientStep);

/// Unit vector v with <df(p), v> = 0 — the one-dimensional complex tangent
/// direction at p.  Throws when the gradient vanishes.
Eigen::Vector2cd complex_tangent(const DefiningFunction& f, const CPoint2& p);

/// Levi form restricted to the complex tangent: v* H v, classified by sign
/// against the tolerance tau.
BoundaryClassification classify_boundary(const DefiningFunction& f, const CPoint2& p,
                                         double tau = kLeviTolerance);

/// Domain-aware dispatch: picks the smooth local defining function for the
/// domain's boundary at p; bidisc points on the distinguished boundary
/// (|z1| = |z2| = 1) are reported non_smooth rather than differentiated.
BoundaryClassification classify_boundary(const ModelDomain& domain, const CPoint2& p,
                                         double tau = kLeviTolerance);

}  // namespace orbitacc
