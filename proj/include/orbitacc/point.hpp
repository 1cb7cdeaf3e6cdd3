#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace orbitacc {

using Complex = std::complex<double>;

inline constexpr Complex kImagUnit{0.0, 1.0};

/// A point of C^2, the ambient space for every domain in this library.
struct CPoint2 {
    Complex z1{0.0, 0.0};
    Complex z2{0.0, 0.0};
};

/// A point of the Siegel upper half-space U = { Im w1 > |w2|^2 }.
struct SiegelPoint {
    Complex w1{0.0, 0.0};
    Complex w2{0.0, 0.0};
};

inline double norm_sq(const CPoint2& p) {
    return std::norm(p.z1) + std::norm(p.z2);
}

/// Euclidean norm of p viewed as a vector in R^4.
inline double norm(const CPoint2& p) { return std::sqrt(norm_sq(p)); }

/// Sup-modulus max(|z1|, |z2|), the natural gauge for the bidisc.
inline double sup_mod(const CPoint2& p) {
    return std::max(std::abs(p.z1), std::abs(p.z2));
}

inline double dist(const CPoint2& a, const CPoint2& b) {
    return std::sqrt(std::norm(a.z1 - b.z1) + std::norm(a.z2 - b.z2));
}

inline bool is_finite(const CPoint2& p) {
    return std::isfinite(p.z1.real()) && std::isfinite(p.z1.imag()) &&
           std::isfinite(p.z2.real()) && std::isfinite(p.z2.imag());
}

inline bool in_siegel(const SiegelPoint& w) {
    return w.w1.imag() - std::norm(w.w2) > 0.0;
}

using Real4 = std::array<double, 4>;

inline Real4 to_real4(const CPoint2& p) {
    return {p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()};
}

inline CPoint2 from_real4(const Real4& v) {
    return {Complex{v[0], v[1]}, Complex{v[2], v[3]}};
}

inline double dist(const Real4& a, const Real4& b) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

}  // namespace orbitacc
