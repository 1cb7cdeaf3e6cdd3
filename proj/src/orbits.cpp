#include "orbitacc/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "orbitacc/rng.hpp"

namespace orbitacc {

namespace {

OrbitRecord make_record(const std::function<CPoint2(long long)>& point_at,
                        long long j_min, long long j_max,
                        const ModelDomain& domain, size_t tail, double conv_tol) {
    if (j_min > j_max) throw std::invalid_argument("iterate_orbit: j_min must be <= j_max");
    OrbitRecord rec;
    rec.entries.reserve(static_cast<size_t>(j_max - j_min + 1));
    for (long long j = j_min; j <= j_max; ++j) {
        const CPoint2 p = point_at(j);
        rec.entries.push_back({j, p, domain.boundary_distance(p)});
    }
    rec.limit = orbit_limit(rec, tail, conv_tol);
    rec.converged = rec.limit.has_value();
    return rec;
}

}  // namespace

OrbitRecord iterate_orbit(const DomainMap& map, const CPoint2& X,
                          long long j_min, long long j_max,
                          const ModelDomain& domain, size_t tail, double conv_tol) {
    if (!domain.contains(X))
        throw std::domain_error("iterate_orbit: X lies outside the domain");
    return make_record([&](long long j) { return map_apply(map_power(map, j), X); },
                       j_min, j_max, domain, tail, conv_tol);
}

OrbitRecord iterate_family_orbit(const std::function<DomainMap(long long)>& family,
                                 const CPoint2& X, long long j_min, long long j_max,
                                 const ModelDomain& domain, size_t tail, double conv_tol) {
    if (!domain.contains(X))
        throw std::domain_error("iterate_orbit: X lies outside the domain");
    return make_record([&](long long j) { return map_apply(family(j), X); },
                       j_min, j_max, domain, tail, conv_tol);
}

namespace {

std::optional<CPoint2> limit_of(std::span<const OrbitEntry> window, double tol) {
    if (window.empty()) return std::nullopt;
    double diameter = 0.0;
    for (size_t a = 0; a < window.size(); ++a) {
        if (window[a].bdist >= tol) return std::nullopt;
        for (size_t b = a + 1; b < window.size(); ++b)
            diameter = std::max(diameter, dist(window[a].point, window[b].point));
    }
    if (diameter >= tol) return std::nullopt;
    Complex s1{0.0, 0.0}, s2{0.0, 0.0};
    for (const OrbitEntry& e : window) {
        s1 += e.point.z1;
        s2 += e.point.z2;
    }
    const double n = static_cast<double>(window.size());
    return CPoint2{s1 / n, s2 / n};
}

}  // namespace

std::optional<CPoint2> orbit_limit(const OrbitRecord& record, size_t tail, double tol) {
    if (record.entries.size() < tail || tail == 0) return std::nullopt;
    return limit_of({record.entries.data() + (record.entries.size() - tail), tail}, tol);
}

std::optional<CPoint2> orbit_limit_front(const OrbitRecord& record, size_t tail, double tol) {
    if (record.entries.size() < tail || tail == 0) return std::nullopt;
    return limit_of({record.entries.data(), tail}, tol);
}

size_t family_size(const FamilySpec& family) {
    if (const auto* c = std::get_if<CyclicFamily>(&family)) return c->j.size();
    if (const auto* p = std::get_if<PsiFamily>(&family)) {
        if (p->j_abs_hi < p->j_abs_lo) return 0;
        const size_t js = 2 * static_cast<size_t>(p->j_abs_hi - p->j_abs_lo + 1);
        return js * p->num_args * p->moduli.size();
    }
    if (const auto* m = std::get_if<MuFamily>(&family)) return m->j.size();
    return std::get<FullBidiscFamily>(family).count;
}

DomainMap family_member(const FamilySpec& family, size_t index) {
    if (const auto* c = std::get_if<CyclicFamily>(&family))
        return map_power(c->generator, c->j.at(index));
    if (const auto* p = std::get_if<PsiFamily>(&family)) {
        // index -> (sign, |j|, modulus, argument), argument fastest.
        const size_t n_args = p->num_args;
        const size_t n_mod = p->moduli.size();
        const size_t per_j = n_args * n_mod;
        const size_t j_slot = index / (2 * per_j);
        const size_t rem = index % (2 * per_j);
        const long long sign = rem < per_j ? 1 : -1;
        const size_t rem2 = rem % per_j;
        const size_t mod_slot = rem2 / n_args;
        const size_t arg_slot = rem2 % n_args;
        const long long j = sign * (p->j_abs_lo + static_cast<long long>(j_slot));
        const double arg = 2.0 * M_PI * static_cast<double>(arg_slot) / static_cast<double>(n_args);
        return psi(j, std::polar(p->moduli[mod_slot], arg));
    }
    if (const auto* m = std::get_if<MuFamily>(&family)) return mu(m->j.at(index));

    const auto& f = std::get<FullBidiscFamily>(family);
    Rng rng = Rng::indexed(f.seed, index);
    // Pick a target near one (or both) boundary faces and take the group
    // element carrying the origin there; Aut(D) is transitive, so this
    // sweeps the whole group while spending samples where orbits pile up.
    const bool first_factor = (rng.raw() & 1ULL) != 0;
    const double phase = rng.uniform(0.0, 2.0 * M_PI);
    const double delta = rng.uniform(0.0, f.near_boundary_delta);
    const Complex near_b = std::polar(1.0 - delta, phase);
    const Complex other = rng.unit_disc();
    const Complex t1 = first_factor ? near_b : other;
    const Complex t2 = first_factor ? other : near_b;
    const double rot1 = rng.uniform(0.0, 2.0 * M_PI);
    const double rot2 = rng.uniform(0.0, 2.0 * M_PI);
    const bool sw = (rng.raw() & 1ULL) != 0;
    // disc_mobius(-t e^{-i rot}, rot) sends 0 to t.
    DiscMap g1 = disc_mobius(-t1 * std::polar(1.0, -rot1), rot1);
    DiscMap g2 = disc_mobius(-t2 * std::polar(1.0, -rot2), rot2);
    if (sw) return BidiscMap{g2, g1, true};
    return BidiscMap{g1, g2, false};
}

namespace {

bool project_to_boundary(const CPoint2& image, const ModelDomain& domain,
                         double threshold, Real4& out) {
    const bool ball_like = domain.kind() == DomainKind::ball ||
                           domain.kind() == DomainKind::omega_prime ||
                           domain.kind() == DomainKind::dented_ball;
    if (ball_like) {
        const double r = norm(image);
        if (1.0 - r >= threshold) return false;
        out = to_real4(CPoint2{image.z1 / r, image.z2 / r});
        return true;
    }
    const double m1 = std::abs(image.z1);
    const double m2 = std::abs(image.z2);
    if (1.0 - std::max(m1, m2) >= threshold) return false;
    CPoint2 proj = image;
    if (m1 > 1.0 - threshold) proj.z1 /= m1;
    if (m2 > 1.0 - threshold) proj.z2 /= m2;
    out = to_real4(proj);
    return true;
}

}  // namespace

AccumResult accumulation_samples(const FamilySpec& family,
                                 std::span<const CPoint2> base_points,
                                 const ModelDomain& domain, double bdist_threshold) {
    if (!(bdist_threshold > 0.0))
        throw std::invalid_argument("accumulation_samples: threshold must be > 0");
    for (const CPoint2& b : base_points)
        if (!domain.contains(b))
            throw std::domain_error("accumulation_samples: base point outside domain");

    const size_t n_members = family_size(family);
    const size_t n_bases = base_points.size();

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t n_chunks = std::min<size_t>(n_members, static_cast<size_t>(hw) * 4);
    std::vector<std::future<std::vector<Real4>>> jobs;
    jobs.reserve(n_chunks);
    for (size_t c = 0; c < n_chunks; ++c) {
        const size_t lo = n_members * c / n_chunks;
        const size_t hi = n_members * (c + 1) / n_chunks;
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<Real4> kept;
            for (size_t m = lo; m < hi; ++m) {
                const DomainMap g = family_member(family, m);
                for (size_t b = 0; b < n_bases; ++b) {
                    const CPoint2 image = map_apply(g, base_points[b]);
                    Real4 row;
                    if (project_to_boundary(image, domain, bdist_threshold, row))
                        kept.push_back(row);
                }
            }
            return kept;
        }));
    }

    AccumResult result;
    result.cloud.provenance = domain.name();
    for (auto& job : jobs) {
        std::vector<Real4> part = job.get();
        result.cloud.points.insert(result.cloud.points.end(), part.begin(), part.end());
    }
    result.status = result.cloud.empty() ? AccumStatus::no_accumulation : AccumStatus::ok;
    return result;
}

double uniformity_check(const DomainMap& map, const CPoint2& limit,
                        double radius, long long j) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("uniformity_check: radius must be in (0, 1)");
    const DomainMap fj = map_power(map, j);
    const double step = radius / 3.0;
    double worst = 0.0;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    const CPoint2 z{Complex{a * step, b * step}, Complex{c * step, d * step}};
                    if (norm(z) > radius) continue;
                    worst = std::max(worst, dist(map_apply(fj, z), limit));
                }
    return worst;
}

}  // namespace orbitacc
