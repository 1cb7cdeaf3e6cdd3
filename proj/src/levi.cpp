#include "orbitacc/levi.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbitacc {

const char* to_string(BoundaryClass cls) {
    switch (cls) {
        case BoundaryClass::strongly_pseudoconvex: return "strongly_pseudoconvex";
        case BoundaryClass::levi_degenerate: return "levi_degenerate";
        case BoundaryClass::not_pseudoconvex: return "not_pseudoconvex";
        default: return "non_smooth";
    }
}

namespace {

CPoint2 shifted(const CPoint2& p, int axis, double h) {
    Real4 v = to_real4(p);
    v[axis] += h;
    return from_real4(v);
}

double eval_checked(const DefiningFunction& f, const CPoint2& p) {
    const double v = f(p);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "complex_hessian: non-finite sample at stencil point ("
           << p.z1.real() << ", " << p.z1.imag() << ", "
           << p.z2.real() << ", " << p.z2.imag() << ")";
        throw std::runtime_error(os.str());
    }
    return v;
}

}  // namespace

HermitianForm complex_hessian(const DefiningFunction& f, const CPoint2& p, double step) {
    const double f0 = eval_checked(f, p);
    double a[4][4];  // real Hessian over (x1, y1, x2, y2)
    for (int i = 0; i < 4; ++i) {
        const double fp = eval_checked(f, shifted(p, i, step));
        const double fm = eval_checked(f, shifted(p, i, -step));
        a[i][i] = (fp - 2.0 * f0 + fm) / (step * step);
    }
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) {
            const double fpp = eval_checked(f, shifted(shifted(p, i, step), k, step));
            const double fpm = eval_checked(f, shifted(shifted(p, i, step), k, -step));
            const double fmp = eval_checked(f, shifted(shifted(p, i, -step), k, step));
            const double fmm = eval_checked(f, shifted(shifted(p, i, -step), k, -step));
            a[i][k] = a[k][i] = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
        }

    // H_jk = ((f_{x_j x_k} + f_{y_j y_k}) + i (f_{x_j y_k} - f_{y_j x_k})) / 4
    // with x_j at real index 2j and y_j at 2j+1.
    Eigen::Matrix2cd h;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
            h(j, k) = Complex{(a[xj][xk] + a[yj][yk]) / 4.0,
                              (a[xj][yk] - a[yj][xk]) / 4.0};
        }
    h = 0.5 * (h + h.adjoint().eval());
    return {h};
}

Eigen::Vector2cd complex_gradient(const DefiningFunction& f, const CPoint2& p, double step) {
    double d[4];
    for (int i = 0; i < 4; ++i) {
        const double fp = eval_checked(f, shifted(p, i, step));
        const double fm = eval_checked(f, shifted(p, i, -step));
        d[i] = (fp - fm) / (2.0 * step);
    }
    // df/dz_j = (f_{x_j} - i f_{y_j}) / 2
    return {Complex{d[0] / 2.0, -d[1] / 2.0}, Complex{d[2] / 2.0, -d[3] / 2.0}};
}

Eigen::Vector2cd complex_tangent(const DefiningFunction& f, const CPoint2& p) {
    const Eigen::Vector2cd g = complex_gradient(f, p);
    const double gn = g.norm();
    if (gn < 1e-8)
        throw std::domain_error("complex_tangent: vanishing gradient (degenerate defining function)");
    Eigen::Vector2cd v;
    v << -g(1), g(0);
    return v / v.norm();
}

BoundaryClassification classify_boundary(const DefiningFunction& f, const CPoint2& p,
                                         double tau) {
    const HermitianForm form = complex_hessian(f, p);
    const Eigen::Vector2cd v = complex_tangent(f, p);
    const double value = (v.adjoint() * form.h * v)(0, 0).real();
    BoundaryClassification out;
    out.levi_value = value;
    if (value > tau)
        out.cls = BoundaryClass::strongly_pseudoconvex;
    else if (value < -tau)
        out.cls = BoundaryClass::not_pseudoconvex;
    else
        out.cls = BoundaryClass::levi_degenerate;
    return out;
}

BoundaryClassification classify_boundary(const ModelDomain& domain, const CPoint2& p,
                                         double tau) {
    switch (domain.kind()) {
        case DomainKind::ball:
            return classify_boundary([](const CPoint2& q) { return norm_sq(q) - 1.0; }, p, tau);
        case DomainKind::omega_prime:
            return classify_boundary([](const CPoint2& q) { return omega_prime_value(q); }, p, tau);
        case DomainKind::dented_ball: {
            const ModelDomain& dom = domain;
            return classify_boundary([&dom](const CPoint2& q) { return dom.value(q); }, p, tau);
        }
        default: break;
    }
    const double m1 = std::abs(p.z1);
    const double m2 = std::abs(p.z2);
    if (m1 > 1.0 - 1e-6 && m2 > 1.0 - 1e-6)
        return {BoundaryClass::non_smooth, 0.0};
    // Smooth face of the bidisc: the active factor's squared modulus is a
    // local defining function.
    if (m1 >= m2)
        return classify_boundary([](const CPoint2& q) { return std::norm(q.z1) - 1.0; }, p, tau);
    return classify_boundary([](const CPoint2& q) { return std::norm(q.z2) - 1.0; }, p, tau);
}

}  // namespace orbitacc
