#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orbitacc/moebius.hpp"
#include "orbitacc/point.hpp"

namespace orbitacc {

/// The bump of Example 1.1, implemented verbatim:
///   (1/100 - |w1|^2)^2 (1/100 - |w2|^2)^2   if |(w1, w2)| <= 1/10,
///   0                                       otherwise.
/// Note the formula as displayed is discontinuous on |(w1,w2)| = 1/10;
/// it is reproduced as written.
double alpha(Complex w1, Complex w2);

inline constexpr double kDentSupportRadius = 0.1;

/// Defining value of Omega' = ball dented at (i, 0):
///   (|z1|^2 + |z2|^2 - 1) + alpha(z1 - i, z2).
double omega_prime_value(const CPoint2& p);

/// Defining value of a dented parent domain with the dent moved to `center`;
/// `parent_value` is the parent's defining value at p.
double dented_value(double parent_value, const CPoint2& p, const CPoint2& center);

enum class Containment { inside, outside, inconclusive };

/// Decides p in the intersection of phi^j(Omega') over all integers j via
/// inverse iteration.  Iteration in each direction stops early once the
/// iterate is clear of the dent support and within the contraction zone of
/// that direction's attracting fixed point; all later iterates then stay
/// outside the dent.  Hits of the hard cap are surfaced as inconclusive.
Containment omega_contains_ex(const CPoint2& p, const BallMap& generator, int j_max);

/// Boolean form of the above; an inconclusive result throws rather than
/// silently truncating.
bool omega_contains(const CPoint2& p, const BallMap& generator, int j_max);

enum class DomainKind { ball, bidisc, omega_prime, dented_ball, dented_bidisc };

/// Which automorphism family propagates the dent of a dented domain.
enum class FamilyTag { none, ex11, ex12, cyclic, psi, mu, full };

/// A defining-function model of one of the studied domains, with
/// membership, boundary distance and boundary sampling.  Immutable value
/// object; all queries are pure.
class ModelDomain {
  public:
    static ModelDomain ball();
    static ModelDomain bidisc();
    static ModelDomain omega_prime();
    /// tag = ex11 or ex12; dent at `center` (default (i,0)) propagated by
    /// that example's cyclic ball family.
    static ModelDomain dented_ball(FamilyTag tag, int j_cap = 200,
                                   CPoint2 center = {kImagUnit, Complex{0.0, 0.0}});
    /// tag in {cyclic, psi, mu, full}.  The cyclic/mu families admit exact
    /// truncated membership; psi/full use a declared finite sample of the
    /// family (an approximation, since those families are uncountable).
    static ModelDomain dented_bidisc(FamilyTag tag, int j_cap = 200,
                                     CPoint2 center = {kImagUnit, Complex{0.0, 0.0}});

    /// Resolves ball|bidisc|omega_prime|ex11|ex12|ex21|ex22|ex23|ex24.
    static ModelDomain by_name(std::string_view name);

    DomainKind kind() const { return kind_; }
    FamilyTag family_tag() const { return tag_; }
    const std::string& name() const { return name_; }
    const CPoint2& dent_center() const { return dent_center_; }

    /// Defining value; the domain is { value < 0 }.  For dented domains this
    /// is the truncated supremum over the propagating family.
    double value(const CPoint2& p) const;

    bool contains(const CPoint2& p) const;
    Containment contains_ex(const CPoint2& p) const;

    /// Distance from an interior point to the boundary.  Exact for ball
    /// (1 - |p|) and bidisc (1 - max|z_k|); for dented domains the minimum
    /// of the parent distance and a bisection estimate along the ray toward
    /// the nearest dent center.
    double boundary_distance(const CPoint2& p) const;

    /// n points with |value| < 1e-8, found by radial bisection from the
    /// origin along seeded directions.  Deterministic given the seed.
    std::vector<CPoint2> sample_boundary(size_t n, std::uint64_t seed) const;

    /// Parent model domain (ball or bidisc) of a dented domain; *this for
    /// the model domains themselves.
    const ModelDomain& parent() const;

    /// Dent images under the propagating family, used by boundary_distance.
    const std::vector<CPoint2>& dent_centers() const { return dent_centers_; }

  private:
    ModelDomain() = default;

    DomainKind kind_ = DomainKind::ball;
    FamilyTag tag_ = FamilyTag::none;
    std::string name_ = "ball";
    CPoint2 dent_center_{kImagUnit, Complex{0.0, 0.0}};
    int j_cap_ = 200;
    std::vector<CPoint2> dent_centers_;

    // Cyclic-type propagation (ex11/ex12/cyclic/mu): the generator and the
    // contraction-zone descriptors for the two iteration directions.
    bool has_generator_ = false;
    DomainMap generator_ = BallMap::identity();
    // Attractor of inverse iteration (j -> +inf) and forward iteration.
    CPoint2 attractor_inv_{};
    CPoint2 attractor_fwd_{};
    bool slice_attractor_ = false;  // mu: only z1 contracts; z2 is carried
    bool parabolic_ = false;        // shared fixed point (Example 1.2 dynamics)

    // Sampled family for psi/full membership.
    std::vector<DomainMap> sampled_family_;

    std::shared_ptr<const ModelDomain> parent_;

    void finish_dented_setup();
    double parent_value(const CPoint2& p) const;
    Containment cyclic_membership(const CPoint2& p) const;
};

/// Safe-zone constants for the adaptive intersection truncation.
inline constexpr double kSafeZoneRadius = 0.3;
inline constexpr double kSafeZoneDentMargin = 0.05;

}  // namespace orbitacc
