#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "orbitacc/point.hpp"

namespace orbitacc {

// Automorphisms are stored as projective matrices acting on homogeneous
// coordinates: 2x2 on [zeta, 1] for the disc, 3x3 on [z1, z2, 1] for the
// ball.  Composition and integer powers are then plain matrix products,
// which keeps group-law checks sharp.  Closed-form evaluators live in the
// test suite as independent oracles.

/// Moebius automorphism of the unit disc D.  Normalized to |det| = 1.
struct DiscMap {
    Eigen::Matrix2cd m;

    static DiscMap identity();
    Complex apply(Complex zeta) const;
};

/// Automorphism of the unit ball B of C^2, acting projectively.
/// Normalized so the (3,3) entry is real positive and the Frobenius norm
/// is sqrt(3); renormalization after every product keeps long power
/// chains from overflowing.
struct BallMap {
    Eigen::Matrix3cd m;

    static BallMap identity();
    CPoint2 apply(const CPoint2& p) const;
};

/// Automorphism of the bidisc D^2: two disc maps applied factorwise,
/// optionally after exchanging the coordinates.
struct BidiscMap {
    DiscMap first;
    DiscMap second;
    bool swap = false;

    static BidiscMap identity();
    CPoint2 apply(const CPoint2& p) const;
};

/// zeta -> e^{i theta} (zeta - a) / (1 - conj(a) zeta).  Requires |a| < 1.
DiscMap disc_mobius(Complex a, double theta);

/// The hyperbolic ball automorphism with boundary fixed points (+-1, 0):
/// (z1, z2) -> ((z1 - 1/5)/(1 - z1/5), sqrt(24)/5 z2 / (1 - z1/5)).
BallMap example11_phi();

/// The parabolic family phi^j; phi^j(0,0) = (-j/(j+2i), 0) and the whole
/// family is a cyclic group: phi^j phi^k = phi^{j+k} exactly.
BallMap example12_phi(long long j);

DiscMap compose(const DiscMap& f, const DiscMap& g);
BallMap compose(const BallMap& f, const BallMap& g);
BidiscMap compose(const BidiscMap& f, const BidiscMap& g);

DiscMap inverse(const DiscMap& f);
BallMap inverse(const BallMap& f);
BidiscMap inverse(const BidiscMap& f);

// Exponentiation by squaring; power(f, 0) is the identity and
// power(f, -j) = power(inverse(f), j).
DiscMap power(const DiscMap& f, long long j);
BallMap power(const BallMap& f, long long j);
BidiscMap power(const BidiscMap& f, long long j);

/// psi(j, a) = (lambda^j(z1), rho_a^j(z2)) with lambda = disc_mobius(-1/5, 0)
/// and rho_a = disc_mobius(a, 0).  Requires 0 < |a| < 1.
BidiscMap psi(long long j, Complex a);

/// mu(j) = (lambda^j(z1), z2).
BidiscMap mu(long long j);

/// The disc map lambda with lambda(0) = 1/5, used throughout the bidisc
/// families.
DiscMap lambda_map();

// ---------------------------------------------------------------------------
// Maps acting on C^2 regardless of the underlying domain.

using DomainMap = std::variant<BallMap, BidiscMap>;

CPoint2 map_apply(const DomainMap& f, const CPoint2& p);
DomainMap map_compose(const DomainMap& f, const DomainMap& g);
DomainMap map_inverse(const DomainMap& f);
DomainMap map_power(const DomainMap& f, long long j);
DomainMap map_identity_like(const DomainMap& f);

// ---------------------------------------------------------------------------
// Cayley transform between B and the Siegel upper half-space.
//
// w1 = i (1 - z1) / (1 + z1),   w2 = z2 / (1 + z1).
//
// This normalization sends (-1, 0) to infinity, which is what turns the
// parabolic family example12_phi into pure real translations of w1.

SiegelPoint cayley_to_siegel(const CPoint2& p);
CPoint2 siegel_to_ball(const SiegelPoint& w);

/// Result of fitting w -> (w1 + t*j, w2) to the Siegel conjugate of a
/// j-indexed family.  When no translation fits, ok is false and
/// max_deviation reports how badly the best fit failed.
struct TranslationFit {
    bool ok = false;
    double t = 0.0;
    double max_deviation = 0.0;
};

/// Conjugates family(j) to the Siegel side on a probe grid and fits a real
/// translation constant t.  Tolerance applies to the worst probe deviation.
TranslationFit detect_translation(const std::function<BallMap(long long)>& family,
                                  std::span<const CPoint2> ball_probes,
                                  long long j_lo, long long j_hi,
                                  double tol = 1e-9);

/// 25 fixed interior points of B used as the default probe grid.
std::vector<CPoint2> default_translation_probes();

}  // namespace orbitacc
