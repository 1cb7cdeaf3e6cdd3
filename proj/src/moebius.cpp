#include "orbitacc/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitacc {

namespace {

void check_finite(const CPoint2& p, const char* what) {
    if (!is_finite(p)) throw std::runtime_error(std::string(what) + ": non-finite result");
}

Eigen::Matrix2cd normalized_disc(Eigen::Matrix2cd m) {
    const double fro = m.norm();
    if (!(fro > 0.0) || !m.allFinite())
        throw std::logic_error("DiscMap: singular matrix (internal invariant violation)");
    const double d = std::abs(m.determinant());
    // Deep hyperbolic powers are projectively near rank-1 and their unit
    // determinant cannot be resolved in doubles; fall back to a Frobenius
    // scale there (any positive scale acts identically).
    if (d > 1e-12 * fro * fro) {
        m /= std::sqrt(d);
    } else {
        m *= std::sqrt(2.0) / fro;
    }
    return m;
}

Eigen::Matrix3cd normalized_ball(Eigen::Matrix3cd m) {
    const double fro = m.norm();
    if (!(fro > 1e-300)) throw std::logic_error("BallMap: zero matrix (internal invariant violation)");
    Complex scale{std::sqrt(3.0) / fro, 0.0};
    const Complex corner = m(2, 2);
    const double cn = std::abs(corner);
    if (cn > 1e-12 * fro) scale *= std::conj(corner) / cn;
    m *= scale;
    return m;
}

}  // namespace

DiscMap DiscMap::identity() { return {Eigen::Matrix2cd::Identity()}; }

Complex DiscMap::apply(Complex zeta) const {
    const Complex num = m(0, 0) * zeta + m(0, 1);
    const Complex den = m(1, 0) * zeta + m(1, 1);
    const Complex w = num / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw std::runtime_error("DiscMap::apply: non-finite result");
    return w;
}

BallMap BallMap::identity() { return {Eigen::Matrix3cd::Identity()}; }

CPoint2 BallMap::apply(const CPoint2& p) const {
    const Eigen::Vector3cd v = m * Eigen::Vector3cd(p.z1, p.z2, Complex{1.0, 0.0});
    const CPoint2 q{v(0) / v(2), v(1) / v(2)};
    check_finite(q, "BallMap::apply");
    return q;
}

BidiscMap BidiscMap::identity() { return {DiscMap::identity(), DiscMap::identity(), false}; }

CPoint2 BidiscMap::apply(const CPoint2& p) const {
    const Complex a = swap ? p.z2 : p.z1;
    const Complex b = swap ? p.z1 : p.z2;
    return {first.apply(a), second.apply(b)};
}

DiscMap disc_mobius(Complex a, double theta) {
    if (!(std::abs(a) < 1.0))
        throw std::invalid_argument("disc_mobius: |a| must be < 1");
    const Complex rot = std::polar(1.0, theta);
    Eigen::Matrix2cd m;
    m << rot, -rot * a, -std::conj(a), Complex{1.0, 0.0};
    return {normalized_disc(m)};
}

DiscMap lambda_map() { return disc_mobius(Complex{-0.2, 0.0}, 0.0); }

BallMap example11_phi() {
    const double s = std::sqrt(1.0 - 0.04);
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 0) = 1.0;
    m(0, 2) = -0.2;
    m(1, 1) = s;
    m(2, 0) = -0.2;
    m(2, 2) = 1.0;
    return {normalized_ball(m)};
}

BallMap example12_phi(long long j) {
    const double jd = static_cast<double>(j);
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 0) = Complex{-jd, 2.0};  // 2i - j
    m(0, 2) = Complex{-jd, 0.0};
    m(1, 1) = Complex{0.0, 2.0};
    m(2, 0) = Complex{jd, 0.0};
    m(2, 2) = Complex{jd, 2.0};  // j + 2i
    return {normalized_ball(m)};
}

DiscMap compose(const DiscMap& f, const DiscMap& g) { return {normalized_disc(f.m * g.m)}; }
BallMap compose(const BallMap& f, const BallMap& g) { return {normalized_ball(f.m * g.m)}; }

BidiscMap compose(const BidiscMap& f, const BidiscMap& g) {
    BidiscMap h;
    h.first = f.swap ? compose(f.first, g.second) : compose(f.first, g.first);
    h.second = f.swap ? compose(f.second, g.first) : compose(f.second, g.second);
    h.swap = f.swap != g.swap;
    return h;
}

DiscMap inverse(const DiscMap& f) {
    Eigen::Matrix2cd adj;
    adj << f.m(1, 1), -f.m(0, 1), -f.m(1, 0), f.m(0, 0);
    return {normalized_disc(adj)};
}

BallMap inverse(const BallMap& f) { return {normalized_ball(f.m.inverse())}; }

BidiscMap inverse(const BidiscMap& f) {
    BidiscMap h;
    h.first = f.swap ? inverse(f.second) : inverse(f.first);
    h.second = f.swap ? inverse(f.first) : inverse(f.second);
    h.swap = f.swap;
    return h;
}

namespace {

template <typename Map>
Map power_impl(Map base, long long j, Map id) {
    if (j < 0) {
        base = inverse(base);
        j = -j;
    }
    Map acc = id;
    while (j > 0) {
        if (j & 1LL) acc = compose(acc, base);
        j >>= 1LL;
        if (j > 0) base = compose(base, base);
    }
    return acc;
}

}  // namespace

DiscMap power(const DiscMap& f, long long j) { return power_impl(f, j, DiscMap::identity()); }
BallMap power(const BallMap& f, long long j) { return power_impl(f, j, BallMap::identity()); }
BidiscMap power(const BidiscMap& f, long long j) { return power_impl(f, j, BidiscMap::identity()); }

BidiscMap psi(long long j, Complex a) {
    if (a == Complex{0.0, 0.0})
        throw std::invalid_argument("psi: rho must be a nontrivial Moebius transformation (a != 0)");
    const DiscMap rho = disc_mobius(a, 0.0);  // validates |a| < 1
    return {power(lambda_map(), j), power(rho, j), false};
}

BidiscMap mu(long long j) { return {power(lambda_map(), j), DiscMap::identity(), false}; }

CPoint2 map_apply(const DomainMap& f, const CPoint2& p) {
    return std::visit([&](const auto& m) { return m.apply(p); }, f);
}

DomainMap map_compose(const DomainMap& f, const DomainMap& g) {
    if (f.index() != g.index())
        throw std::invalid_argument("map_compose: maps act on different domains");
    if (std::holds_alternative<BallMap>(f))
        return compose(std::get<BallMap>(f), std::get<BallMap>(g));
    return compose(std::get<BidiscMap>(f), std::get<BidiscMap>(g));
}

DomainMap map_inverse(const DomainMap& f) {
    return std::visit([](const auto& m) -> DomainMap { return inverse(m); }, f);
}

DomainMap map_power(const DomainMap& f, long long j) {
    return std::visit([&](const auto& m) -> DomainMap { return power(m, j); }, f);
}

DomainMap map_identity_like(const DomainMap& f) {
    if (std::holds_alternative<BallMap>(f)) return BallMap::identity();
    return BidiscMap::identity();
}

SiegelPoint cayley_to_siegel(const CPoint2& p) {
    const Complex den = Complex{1.0, 0.0} + p.z1;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("cayley_to_siegel: pole at z1 = -1 (maps to infinity)");
    return {kImagUnit * (Complex{1.0, 0.0} - p.z1) / den, p.z2 / den};
}

CPoint2 siegel_to_ball(const SiegelPoint& w) {
    const Complex den = kImagUnit + w.w1;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("siegel_to_ball: pole at w1 = -i");
    return {(kImagUnit - w.w1) / den, 2.0 * kImagUnit * w.w2 / den};
}

std::vector<CPoint2> default_translation_probes() {
    static const double grid[5] = {-0.6, -0.3, 0.0, 0.3, 0.6};
    std::vector<CPoint2> probes;
    probes.reserve(25);
    for (double u : grid)
        for (double v : grid)
            probes.push_back({Complex{u, 0.0}, Complex{v, 0.0}});
    return probes;
}

TranslationFit detect_translation(const std::function<BallMap(long long)>& family,
                                  std::span<const CPoint2> ball_probes,
                                  long long j_lo, long long j_hi, double tol) {
    std::vector<SiegelPoint> ws;
    ws.reserve(ball_probes.size());
    for (const CPoint2& p : ball_probes) ws.push_back(cayley_to_siegel(p));

    // Least-squares fit of Re(T_j(w).w1 - w.w1) against j.
    double num = 0.0, den = 0.0;
    for (long long j = j_lo; j <= j_hi; ++j) {
        if (j == 0) continue;
        const BallMap fj = family(j);
        for (size_t i = 0; i < ball_probes.size(); ++i) {
            const SiegelPoint tw = cayley_to_siegel(fj.apply(ball_probes[i]));
            num += static_cast<double>(j) * (tw.w1.real() - ws[i].w1.real());
            den += static_cast<double>(j) * static_cast<double>(j);
        }
    }
    TranslationFit fit;
    fit.t = den > 0.0 ? num / den : 0.0;

    double worst = 0.0;
    for (long long j = j_lo; j <= j_hi; ++j) {
        const BallMap fj = family(j);
        for (size_t i = 0; i < ball_probes.size(); ++i) {
            const SiegelPoint tw = cayley_to_siegel(fj.apply(ball_probes[i]));
            const Complex d1 = tw.w1 - (ws[i].w1 + Complex{fit.t * static_cast<double>(j), 0.0});
            const Complex d2 = tw.w2 - ws[i].w2;
            worst = std::max(worst, std::sqrt(std::norm(d1) + std::norm(d2)));
        }
    }
    fit.max_deviation = worst;
    fit.ok = worst <= tol;
    return fit;
}

}  // namespace orbitacc
