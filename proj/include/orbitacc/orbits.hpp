#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "orbitacc/accum.hpp"
#include "orbitacc/domains.hpp"
#include "orbitacc/moebius.hpp"

namespace orbitacc {

struct OrbitEntry {
    long long j = 0;
    CPoint2 point;
    double bdist = 0.0;
};

/// Orbit of one point under integer powers of a map, with boundary
/// distances attached.  `limit` and `converged` reflect the default
/// convergence test (tail 10, tol 1e-6) at the j_max end.
struct OrbitRecord {
    std::vector<OrbitEntry> entries;  // strictly increasing j
    std::optional<CPoint2> limit;
    bool converged = false;
};

inline constexpr size_t kDefaultTail = 10;
inline constexpr double kDefaultConvTol = 1e-6;
inline constexpr double kDefaultBdistThreshold = 1e-3;

/// Entries for every j in [j_min, j_max], each computed as power(map, j)
/// applied to X (no cumulative drift).  X must lie inside the domain.
OrbitRecord iterate_orbit(const DomainMap& map, const CPoint2& X,
                          long long j_min, long long j_max,
                          const ModelDomain& domain,
                          size_t tail = kDefaultTail,
                          double conv_tol = kDefaultConvTol);

/// Same, but the j-th entry is family(j) applied to X (for families that
/// are indexed rather than generated, e.g. psi with a fixed rho).
OrbitRecord iterate_family_orbit(const std::function<DomainMap(long long)>& family,
                                 const CPoint2& X, long long j_min, long long j_max,
                                 const ModelDomain& domain,
                                 size_t tail = kDefaultTail,
                                 double conv_tol = kDefaultConvTol);

/// Mean of the last `tail` points if their diameter and boundary distances
/// are all below tol; otherwise nullopt.
std::optional<CPoint2> orbit_limit(const OrbitRecord& record, size_t tail, double tol);

/// Same test applied to the first `tail` entries (the j_min end of a
/// two-sided record).
std::optional<CPoint2> orbit_limit_front(const OrbitRecord& record, size_t tail, double tol);

/// Inclusive integer range with stride.
struct JRange {
    long long lo = 0;
    long long hi = 0;
    long long step = 1;

    size_t size() const {
        if (hi < lo) return 0;
        return static_cast<size_t>((hi - lo) / step) + 1;
    }
    long long at(size_t k) const { return lo + static_cast<long long>(k) * step; }
};

/// {generator^j : j in range}.
struct CyclicFamily {
    DomainMap generator;
    JRange j;
};

/// {psi(j, a)} over +-[j_abs_lo, j_abs_hi] and a polar grid of a-values
/// (num_args arguments x the given moduli).
struct PsiFamily {
    long long j_abs_lo = 30;
    long long j_abs_hi = 60;
    size_t num_args = 32;
    std::vector<double> moduli = {0.3, 0.5, 0.7, 0.9};
};

/// {mu(j) : j in range}.
struct MuFamily {
    JRange j;
};

/// Seeded sample of Aut(D^2): factorwise Moebius maps plus the coordinate
/// swap, biased so that sampled members carry the base point near the
/// boundary (that is where accumulation happens).
struct FullBidiscFamily {
    size_t count = 100000;
    std::uint64_t seed = 42;
    double near_boundary_delta = 5e-4;
};

using FamilySpec = std::variant<CyclicFamily, PsiFamily, MuFamily, FullBidiscFamily>;

size_t family_size(const FamilySpec& family);
DomainMap family_member(const FamilySpec& family, size_t index);

enum class AccumStatus { ok, no_accumulation };

struct AccumResult {
    AccumStatus status = AccumStatus::ok;
    PointCloud cloud;
};

/// Applies every family member to every base point, keeps images with
/// boundary distance below the threshold and stores their boundary
/// projections (radial for the ball, factorwise for the bidisc).  The sweep
/// runs in parallel; output order is the (member, base) grid order, so
/// results are deterministic.  An empty harvest is a status, not an error.
AccumResult accumulation_samples(const FamilySpec& family,
                                 std::span<const CPoint2> base_points,
                                 const ModelDomain& domain,
                                 double bdist_threshold);

/// Max over a fixed grid of the closed ball of radius r of
/// ||power(map, j)(z) - limit||; sup -> 0 exhibits uniform convergence on
/// compact subsets.
double uniformity_check(const DomainMap& map, const CPoint2& limit,
                        double radius, long long j);

}  // namespace orbitacc
