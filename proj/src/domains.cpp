#include "orbitacc/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbitacc/rng.hpp"

namespace orbitacc {

double alpha(Complex w1, Complex w2) {
    const double n1 = std::norm(w1);
    const double n2 = std::norm(w2);
    if (n1 + n2 > 0.01) return 0.0;
    const double f1 = 0.01 - n1;
    const double f2 = 0.01 - n2;
    return f1 * f1 * f2 * f2;
}

double omega_prime_value(const CPoint2& p) {
    return (norm_sq(p) - 1.0) + alpha(p.z1 - kImagUnit, p.z2);
}

double dented_value(double parent_value, const CPoint2& p, const CPoint2& center) {
    return parent_value + alpha(p.z1 - center.z1, p.z2 - center.z2);
}

namespace {

double ball_value(const CPoint2& p) { return norm_sq(p) - 1.0; }
double bidisc_value(const CPoint2& p) { return sup_mod(p) - 1.0; }

struct StepMaps {
    DomainMap fwd;  // generator
    DomainMap inv;  // generator^{-1}
};

/// Iterates a map from the origin until the step size stalls; the final
/// point approximates the attracting boundary fixed point (or, for the
/// parabolic family, gets close enough to serve as a contraction-zone
/// center).
CPoint2 estimate_attractor(const DomainMap& step) {
    CPoint2 q{};
    for (int k = 0; k < 4096; ++k) {
        const CPoint2 next = map_apply(step, q);
        const double moved = dist(next, q);
        q = next;
        if (moved < 1e-4 && k > 0) break;
    }
    return q;
}

// Early-exit rules for truncating the infinite intersection.
//
// Hyperbolic generators (distinct attracting fixed points per direction)
// contract monotonically near those points: once an iterate is within
// kSafeZoneRadius of its attractor and clear of the dent support, every
// later iterate stays there, so the direction is settled.
//
// The parabolic Example 1.2 family has a single fixed point and its
// iterates can swing back through the interior, so the zone rule is
// unsound for it.  Its Cayley conjugate is the translation w1 -> w1 + 1,
// under which Re w1 moves monotonically by one per step while the dent
// support occupies a bounded band around Re w1 = 1; the direction settles
// once the iterate's Re w1 has left that band on the outgoing side.
enum class ExitMode { hyperbolic_zone, parabolic_strip };

struct DirectionExit {
    ExitMode mode = ExitMode::hyperbolic_zone;
    CPoint2 attractor;
    bool slice = false;  // mu: only z1 contracts, z2 is carried along
    CPoint2 dent_center;
    double re_exit = 0.0;   // parabolic threshold on Re w1
    bool decreasing = false;  // whether Re w1 decreases along this direction
};

double siegel_re(const CPoint2& q) {
    const Complex den = Complex{1.0, 0.0} + q.z1;
    const Complex w1 = kImagUnit * (Complex{1.0, 0.0} - q.z1) / den;
    return w1.real();
}

bool direction_settled(const CPoint2& q, const DirectionExit& exit) {
    if (exit.mode == ExitMode::parabolic_strip) {
        const double re = siegel_re(q);
        if (!std::isfinite(re)) return false;
        return exit.decreasing ? re < exit.re_exit : re > exit.re_exit;
    }
    const double d_attr = exit.slice ? std::abs(q.z1 - exit.attractor.z1)
                                     : dist(q, exit.attractor);
    if (d_attr >= kSafeZoneRadius) return false;
    return dist(q, exit.dent_center) > kDentSupportRadius + kSafeZoneDentMargin;
}

struct CyclicMembershipParams {
    double (*parent_value)(const CPoint2&);
    CPoint2 dent_center;
    int j_cap;
    DirectionExit exit_inv;
    DirectionExit exit_fwd;
};

/// Builds the per-direction exit rules for a generator.  A shared fixed
/// point for both directions marks the parabolic case.
CyclicMembershipParams make_membership_params(const StepMaps& steps,
                                              double (*parent_value)(const CPoint2&),
                                              const CPoint2& dent_center, int j_cap,
                                              bool slice) {
    CyclicMembershipParams params{parent_value, dent_center, j_cap, {}, {}};
    const CPoint2 attr_inv = estimate_attractor(steps.inv);
    const CPoint2 attr_fwd = estimate_attractor(steps.fwd);
    const bool parabolic = dist(attr_inv, attr_fwd) < 0.1;
    if (parabolic) {
        const double band = siegel_re(dent_center);
        params.exit_inv = {ExitMode::parabolic_strip, attr_inv, false, dent_center,
                           band - 0.5, true};
        params.exit_fwd = {ExitMode::parabolic_strip, attr_fwd, false, dent_center,
                           band + 0.5, false};
    } else {
        params.exit_inv = {ExitMode::hyperbolic_zone, attr_inv, slice, dent_center, 0.0, false};
        params.exit_fwd = {ExitMode::hyperbolic_zone, attr_fwd, slice, dent_center, 0.0, false};
    }
    return params;
}

Containment cyclic_contains(const CPoint2& p, const StepMaps& steps,
                            const CyclicMembershipParams& params) {
    if (params.parent_value(p) >= 0.0) return Containment::outside;
    if (dented_value(params.parent_value(p), p, params.dent_center) >= 0.0)
        return Containment::outside;

    bool inconclusive = false;
    const DomainMap* dirs[2] = {&steps.inv, &steps.fwd};
    const DirectionExit* exits[2] = {&params.exit_inv, &params.exit_fwd};
    for (int d = 0; d < 2; ++d) {
        CPoint2 q = p;
        bool settled = false;
        for (int j = 1; j <= params.j_cap; ++j) {
            q = map_apply(*dirs[d], q);
            if (dented_value(params.parent_value(q), q, params.dent_center) >= 0.0)
                return Containment::outside;
            if (direction_settled(q, *exits[d])) {
                settled = true;
                break;
            }
        }
        if (!settled) inconclusive = true;
    }
    return inconclusive ? Containment::inconclusive : Containment::inside;
}

}  // namespace

Containment omega_contains_ex(const CPoint2& p, const BallMap& generator, int j_max) {
    if (j_max < 1) throw std::invalid_argument("omega_contains: j_max must be >= 1");
    StepMaps steps{generator, inverse(generator)};
    const CPoint2 dent{kImagUnit, Complex{0.0, 0.0}};
    return cyclic_contains(p, steps,
                           make_membership_params(steps, &ball_value, dent, j_max, false));
}

bool omega_contains(const CPoint2& p, const BallMap& generator, int j_max) {
    switch (omega_contains_ex(p, generator, j_max)) {
        case Containment::inside: return true;
        case Containment::outside: return false;
        default:
            throw std::runtime_error(
                "omega_contains: inconclusive at j_max cap; increase j_max");
    }
}

ModelDomain ModelDomain::ball() {
    ModelDomain d;
    d.kind_ = DomainKind::ball;
    d.name_ = "ball";
    return d;
}

ModelDomain ModelDomain::bidisc() {
    ModelDomain d;
    d.kind_ = DomainKind::bidisc;
    d.name_ = "bidisc";
    return d;
}

ModelDomain ModelDomain::omega_prime() {
    ModelDomain d;
    d.kind_ = DomainKind::omega_prime;
    d.name_ = "omega_prime";
    d.dent_centers_ = {CPoint2{kImagUnit, Complex{0.0, 0.0}}};
    d.parent_ = std::make_shared<const ModelDomain>(ball());
    return d;
}

ModelDomain ModelDomain::dented_ball(FamilyTag tag, int j_cap, CPoint2 center) {
    if (tag != FamilyTag::ex11 && tag != FamilyTag::ex12)
        throw std::invalid_argument("dented_ball: tag must be ex11 or ex12");
    if (j_cap < 1) throw std::invalid_argument("dented_ball: j_cap must be >= 1");
    ModelDomain d;
    d.kind_ = DomainKind::dented_ball;
    d.tag_ = tag;
    d.name_ = tag == FamilyTag::ex11 ? "ex11" : "ex12";
    d.dent_center_ = center;
    d.j_cap_ = j_cap;
    d.has_generator_ = true;
    d.generator_ = tag == FamilyTag::ex11 ? example11_phi() : example12_phi(1);
    d.parent_ = std::make_shared<const ModelDomain>(ball());
    d.finish_dented_setup();
    return d;
}

ModelDomain ModelDomain::dented_bidisc(FamilyTag tag, int j_cap, CPoint2 center) {
    if (j_cap < 1) throw std::invalid_argument("dented_bidisc: j_cap must be >= 1");
    ModelDomain d;
    d.kind_ = DomainKind::dented_bidisc;
    d.tag_ = tag;
    d.dent_center_ = center;
    d.j_cap_ = j_cap;
    d.parent_ = std::make_shared<const ModelDomain>(bidisc());
    switch (tag) {
        case FamilyTag::cyclic:
            d.name_ = "ex21";
            d.has_generator_ = true;
            d.generator_ = BidiscMap{lambda_map(), lambda_map(), false};
            break;
        case FamilyTag::mu:
            d.name_ = "ex23";
            d.has_generator_ = true;
            d.generator_ = mu(1);
            d.slice_attractor_ = true;
            break;
        case FamilyTag::psi: {
            d.name_ = "ex22";
            // Declared finite sample of the uncountable psi family.
            const double moduli[3] = {0.3, 0.6, 0.9};
            for (int ja = 1; ja <= 40; ++ja)
                for (int sgn : {1, -1})
                    for (double r : moduli)
                        for (int k = 0; k < 16; ++k) {
                            const double arg = 2.0 * M_PI * k / 16.0;
                            d.sampled_family_.push_back(
                                psi(sgn * ja, std::polar(r, arg)));
                        }
            break;
        }
        case FamilyTag::full: {
            d.name_ = "ex24";
            Rng rng(0x5EEDULL);
            for (int k = 0; k < 128; ++k) {
                const Complex a1 = rng.unit_disc();
                const Complex a2 = rng.unit_disc();
                const double t1 = rng.uniform(0.0, 2.0 * M_PI);
                const double t2 = rng.uniform(0.0, 2.0 * M_PI);
                const bool sw = (rng.raw() & 1ULL) != 0;
                d.sampled_family_.push_back(
                    BidiscMap{disc_mobius(a1, t1), disc_mobius(a2, t2), sw});
            }
            break;
        }
        default:
            throw std::invalid_argument("dented_bidisc: tag must be cyclic, psi, mu or full");
    }
    d.finish_dented_setup();
    return d;
}

void ModelDomain::finish_dented_setup() {
    if (has_generator_) {
        const DomainMap inv = map_inverse(generator_);
        attractor_inv_ = estimate_attractor(inv);
        attractor_fwd_ = estimate_attractor(generator_);
        parabolic_ = dist(attractor_inv_, attractor_fwd_) < 0.1;
        for (int j = -60; j <= 60; ++j)
            dent_centers_.push_back(map_apply(map_power(generator_, j), dent_center_));
    } else {
        dent_centers_.push_back(dent_center_);
        for (size_t k = 0; k < sampled_family_.size(); k += 23)
            dent_centers_.push_back(map_apply(sampled_family_[k], dent_center_));
    }
}

ModelDomain ModelDomain::by_name(std::string_view name) {
    if (name == "ball") return ball();
    if (name == "bidisc") return bidisc();
    if (name == "omega_prime") return omega_prime();
    if (name == "ex11") return dented_ball(FamilyTag::ex11);
    if (name == "ex12") return dented_ball(FamilyTag::ex12);
    if (name == "ex21") return dented_bidisc(FamilyTag::cyclic);
    if (name == "ex22") return dented_bidisc(FamilyTag::psi);
    if (name == "ex23") return dented_bidisc(FamilyTag::mu);
    if (name == "ex24") return dented_bidisc(FamilyTag::full);
    throw std::invalid_argument("unknown domain name: " + std::string(name));
}

const ModelDomain& ModelDomain::parent() const { return parent_ ? *parent_ : *this; }

double ModelDomain::parent_value(const CPoint2& p) const {
    switch (kind_) {
        case DomainKind::ball:
        case DomainKind::omega_prime:
        case DomainKind::dented_ball:
            return ball_value(p);
        default:
            return bidisc_value(p);
    }
}

double ModelDomain::value(const CPoint2& p) const {
    switch (kind_) {
        case DomainKind::ball: return ball_value(p);
        case DomainKind::bidisc: return bidisc_value(p);
        case DomainKind::omega_prime: return omega_prime_value(p);
        default: break;
    }
    // Dented domain: truncated supremum of the propagated dent values.
    const double pv = parent_value(p);
    if (pv >= 0.0) return pv;
    double best = dented_value(pv, p, dent_center_);
    if (best >= 0.0) return best;
    if (has_generator_) {
        const DomainMap inv = map_inverse(generator_);
        const DomainMap* dirs[2] = {&inv, &generator_};
        DirectionExit exits[2];
        if (parabolic_) {
            const double band = siegel_re(dent_center_);
            exits[0] = {ExitMode::parabolic_strip, attractor_inv_, false, dent_center_,
                        band - 0.5, true};
            exits[1] = {ExitMode::parabolic_strip, attractor_fwd_, false, dent_center_,
                        band + 0.5, false};
        } else {
            exits[0] = {ExitMode::hyperbolic_zone, attractor_inv_, slice_attractor_,
                        dent_center_, 0.0, false};
            exits[1] = {ExitMode::hyperbolic_zone, attractor_fwd_, slice_attractor_,
                        dent_center_, 0.0, false};
        }
        for (int d = 0; d < 2; ++d) {
            CPoint2 q = p;
            for (int j = 1; j <= j_cap_; ++j) {
                q = map_apply(*dirs[d], q);
                best = std::max(best, dented_value(parent_value(q), q, dent_center_));
                if (best >= 0.0) return best;
                if (direction_settled(q, exits[d])) break;
            }
        }
    } else {
        for (const DomainMap& g : sampled_family_) {
            const CPoint2 q = map_apply(map_inverse(g), p);
            best = std::max(best, dented_value(parent_value(q), q, dent_center_));
            if (best >= 0.0) return best;
        }
    }
    return best;
}

Containment ModelDomain::contains_ex(const CPoint2& p) const {
    switch (kind_) {
        case DomainKind::ball:
        case DomainKind::bidisc:
            return parent_value(p) < 0.0 ? Containment::inside : Containment::outside;
        case DomainKind::omega_prime:
            return omega_prime_value(p) < 0.0 ? Containment::inside : Containment::outside;
        default: break;
    }
    if (has_generator_) {
        StepMaps steps{generator_, map_inverse(generator_)};
        CyclicMembershipParams params{
            kind_ == DomainKind::dented_ball ? &ball_value : &bidisc_value,
            dent_center_, j_cap_, {}, {}};
        if (parabolic_) {
            const double band = siegel_re(dent_center_);
            params.exit_inv = {ExitMode::parabolic_strip, attractor_inv_, false,
                               dent_center_, band - 0.5, true};
            params.exit_fwd = {ExitMode::parabolic_strip, attractor_fwd_, false,
                               dent_center_, band + 0.5, false};
        } else {
            params.exit_inv = {ExitMode::hyperbolic_zone, attractor_inv_, slice_attractor_,
                               dent_center_, 0.0, false};
            params.exit_fwd = {ExitMode::hyperbolic_zone, attractor_fwd_, slice_attractor_,
                               dent_center_, 0.0, false};
        }
        return cyclic_contains(p, steps, params);
    }
    return value(p) < 0.0 ? Containment::inside : Containment::outside;
}

bool ModelDomain::contains(const CPoint2& p) const {
    switch (contains_ex(p)) {
        case Containment::inside: return true;
        case Containment::outside: return false;
        default:
            throw std::runtime_error(name_ + ": inconclusive membership at j_cap " +
                                     std::to_string(j_cap_));
    }
}

namespace {

/// Smallest t in (0, t_hi] with value(p + t u) >= 0, located by a coarse
/// scan followed by bisection to interval width 1e-12.
double ray_root(const ModelDomain& dom, const CPoint2& p, const CPoint2& u, double t_hi) {
    const auto at = [&](double t) {
        return CPoint2{p.z1 + t * u.z1, p.z2 + t * u.z2};
    };
    constexpr int kScan = 64;
    double lo = 0.0, hi = t_hi;
    for (int k = 1; k <= kScan; ++k) {
        const double t = t_hi * k / kScan;
        if (dom.value(at(t)) >= 0.0) {
            hi = t;
            lo = t_hi * (k - 1) / kScan;
            break;
        }
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (dom.value(at(mid)) >= 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double ModelDomain::boundary_distance(const CPoint2& p) const {
    const double pv = value(p);
    if (pv >= 0.0) {
        // Tolerate boundary-grazing round-off from long orbit chains.
        if (pv > 1e-9) throw std::domain_error(name_ + ": boundary_distance requires an interior point");
        return 0.0;
    }
    double parent_dist;
    if (kind_ == DomainKind::ball || kind_ == DomainKind::omega_prime ||
        kind_ == DomainKind::dented_ball) {
        parent_dist = std::max(0.0, 1.0 - norm(p));
    } else {
        parent_dist = std::max(0.0, 1.0 - sup_mod(p));
    }
    if (kind_ == DomainKind::ball || kind_ == DomainKind::bidisc) return parent_dist;

    // Nearest dent image; the dent can only pull the boundary closer when
    // its support sphere is reachable before the parent boundary.
    double best_center_dist = std::numeric_limits<double>::infinity();
    const CPoint2* nearest = nullptr;
    for (const CPoint2& c : dent_centers_) {
        const double dc = dist(p, c);
        if (dc < best_center_dist) {
            best_center_dist = dc;
            nearest = &c;
        }
    }
    if (nearest == nullptr || best_center_dist - kDentSupportRadius > parent_dist)
        return parent_dist;
    const double scale = best_center_dist;
    const CPoint2 u{(nearest->z1 - p.z1) / scale, (nearest->z2 - p.z2) / scale};
    return std::min(parent_dist, ray_root(*this, p, u, scale));
}

std::vector<CPoint2> ModelDomain::sample_boundary(size_t n, std::uint64_t seed) const {
    if (n < 1) throw std::invalid_argument("sample_boundary: n must be >= 1");
    const bool ball_like = kind_ == DomainKind::ball || kind_ == DomainKind::omega_prime ||
                           kind_ == DomainKind::dented_ball;
    Rng rng(seed);
    std::vector<CPoint2> out;
    out.reserve(n);
    while (out.size() < n) {
        const CPoint2 q = ball_like ? rng.ball_point() : rng.bidisc_point();
        const double scale = ball_like ? norm(q) : sup_mod(q);
        if (scale < 0.1) continue;
        const CPoint2 u{q.z1 / scale, q.z2 / scale};
        // value(t*u) is negative at t = 0 (the origin is interior to every
        // modeled domain) and positive at t_hi.
        double lo = 0.0, hi = 1.5;
        if (value(CPoint2{hi * u.z1, hi * u.z2}) < 0.0) continue;
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            const CPoint2 pm{mid * u.z1, mid * u.z2};
            (value(pm) >= 0.0 ? hi : lo) = mid;
        }
        const double t = 0.5 * (lo + hi);
        out.push_back({t * u.z1, t * u.z2});
    }
    return out;
}

}  // namespace orbitacc
