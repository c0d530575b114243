#pragma once

// Slope fibers of A x A, clusters of consecutive slopes, Balog-style vector
// sums on pairs of origin lines, pairwise intersection energies with their
// injection into the ternary equation
//   a a_1 (l1 - l4) + b a_2 (l2 - l4) + c a_3 (l4 - l3) = 0,
// and the inclusion-exclusion count mu(U) per full cluster. A must consist of
// strictly positive scalars so that vector sums stay inside the open slope
// wedge.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"
#include "bflab/setops.hpp"

namespace bflab {

struct SlopeFiber {
    Scalar slope;           // l in A:A
    ScalarSet members;      // A_l = {x in A : l x in A}
    Scalar representative;  // a_l, the smallest member (fixed for reproducibility)

    Point rep_point() const { return Point{representative, slope * representative}; }
};

// One fiber per ratio in A:A, ascending by slope; sum of fiber sizes is |A|^2.
inline std::vector<SlopeFiber> slope_fibers(const ScalarSet& a) {
    if (a.empty()) throw std::domain_error("slope fibers of an empty set");
    for (const auto& x : a)
        if (x.signum() <= 0)
            throw std::domain_error("slope fibers require strictly positive A");
    std::map<Scalar, std::vector<Scalar>> by_slope;
    for (const auto& x : a)
        for (const auto& y : a) by_slope[y / x].push_back(x);
    std::vector<SlopeFiber> fibers;
    fibers.reserve(by_slope.size());
    for (auto& [slope, xs] : by_slope) {
        ScalarSet members(std::move(xs));
        Scalar rep = members.items().front();
        fibers.push_back(SlopeFiber{slope, std::move(members), rep});
    }
    return fibers;
}

struct DoublingStat {
    Scalar dhat;  // |A:A|^2 / |A|^2, the trivial upper bound standing in for d(A)
};

inline DoublingStat trivial_doubling_bound(std::uint64_t ratio_count, std::uint64_t a_size) {
    Scalar r(static_cast<long>(ratio_count)), n(static_cast<long>(a_size));
    return DoublingStat{(r * r) / (n * n)};
}

struct ChosenM {
    std::uint64_t m;    // clamped into [2, |A:A|]
    std::uint64_t raw;  // floor(|A|^(1/6) / (sqrt(8 C) dhat^(1/6)))
    bool clamped;
    Scalar dhat;
};

// M = floor(|A|^(1/6) / (sqrt(8 C_param) dhat^(1/6))), evaluated exactly:
// raw M is the largest integer m with m^6 (8 C)^3 dhat <= |A|.
inline ChosenM choose_M(std::uint64_t a_size, std::uint64_t ratio_count,
                        const Scalar& c_param) {
    if (c_param.signum() <= 0) throw std::domain_error("C parameter must be positive");
    if (ratio_count < 2) throw std::domain_error("need at least two slopes");
    DoublingStat stat = trivial_doubling_bound(ratio_count, a_size);
    Scalar denom = pow(Scalar(8) * c_param, 3) * stat.dhat;
    Scalar bound = Scalar(static_cast<long>(a_size)) / denom;
    mpz_class fl = bound.floor_value();
    std::uint64_t raw = 0;
    if (sgn(fl) > 0) {
        mpz_class root;
        mpz_root(root.get_mpz_t(), fl.get_mpz_t(), 6);
        raw = static_cast<std::uint64_t>(root.get_ui());
    }
    ChosenM out{raw, raw, false, stat.dhat};
    if (raw < 2) {
        out.m = 2;  // the large-doubling branch: dhat dwarfs |A|
        out.clamped = true;
    } else if (raw > ratio_count) {
        out.m = ratio_count;
        out.clamped = true;
    }
    return out;
}

struct Cluster {
    std::vector<SlopeFiber> slopes;  // strictly increasing
    bool full;                       // exactly M slopes
};

// Consecutive blocks of exactly M slopes; only the trailing block may be
// partial. The number of full clusters is floor(#slopes / M) >= #slopes/(2M).
inline std::vector<Cluster> build_clusters(const std::vector<SlopeFiber>& fibers,
                                           std::uint64_t m) {
    if (m < 2) throw std::domain_error("cluster width must be >= 2");
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < fibers.size(); i += m) {
        std::size_t end = std::min(fibers.size(), i + m);
        Cluster c;
        c.slopes.assign(fibers.begin() + i, fibers.begin() + end);
        c.full = end - i == m;
        clusters.push_back(std::move(c));
    }
    return clusters;
}

// {a (a_1, l1 a_1) + b (a_2, l2 a_2) : a, b in A}: exactly |A|^2 points, each
// with slope strictly between l1 and l2.
inline PointSet cluster_sum_points(const SlopeFiber& f1, const SlopeFiber& f2,
                                   const ScalarSet& a) {
    if (f1.slope == f2.slope)
        throw std::domain_error("cluster sum needs two distinct slopes");
    Point v1 = f1.rep_point(), v2 = f2.rep_point();
    std::vector<Point> items;
    items.reserve(a.size() * a.size());
    for (const auto& s : a)
        for (const auto& t : a) items.push_back(s * v1 + t * v2);
    PointSet out(std::move(items));
    if (out.size() != a.size() * a.size())
        throw std::logic_error("vector sums collided; is A strictly positive?");
    return out;
}

struct IntersectionReport {
    std::uint64_t count;  // |(S12 meet S34)|
    std::array<Scalar, 3> coefficients;  // a_1(l1-l4), a_2(l2-l4), a_3(l4-l3), all nonzero
    std::vector<std::array<Scalar, 3>> solutions;  // the (a, b, c) per intersection point
    std::array<int, 4> labeling;  // fiber order after relabeling (fresh slope last)
};

// E(l1,l2,l3,l4): the intersection of the two sum-point sets, with each
// element mapped to its solution of the ternary equation. The relabeling
// rotates pair structure until the fourth slope differs from the other three;
// the map element -> (a,b,c) is verified injective.
inline IntersectionReport pair_intersection_energy(const SlopeFiber& f1, const SlopeFiber& f2,
                                                   const SlopeFiber& f3, const SlopeFiber& f4,
                                                   const ScalarSet& a) {
    if (f1.slope == f2.slope || f3.slope == f4.slope)
        throw std::domain_error("slope pairs must consist of distinct slopes");
    {
        std::pair<Scalar, Scalar> p1 = std::minmax(f1.slope, f2.slope);
        std::pair<Scalar, Scalar> p2 = std::minmax(f3.slope, f4.slope);
        if (p1 == p2)
            throw std::domain_error("slope pairs must be distinct as unordered pairs");
    }
    const SlopeFiber* fs[4] = {&f1, &f2, &f3, &f4};
    // try the pair-preserving relabelings; first one whose last slope is
    // different from the rest wins
    constexpr std::array<std::array<int, 4>, 4> rotations = {
        {{0, 1, 2, 3}, {0, 1, 3, 2}, {2, 3, 0, 1}, {2, 3, 1, 0}}};
    const std::array<int, 4>* chosen = nullptr;
    for (const auto& rot : rotations) {
        const Scalar& last = fs[rot[3]]->slope;
        if (!(last == fs[rot[0]]->slope) && !(last == fs[rot[1]]->slope) &&
            !(last == fs[rot[2]]->slope)) {
            chosen = &rot;
            break;
        }
    }
    if (!chosen) throw std::logic_error("no valid relabeling; pairs were not distinct");
    const SlopeFiber &g1 = *fs[(*chosen)[0]], &g2 = *fs[(*chosen)[1]];
    const SlopeFiber &g3 = *fs[(*chosen)[2]], &g4 = *fs[(*chosen)[3]];

    IntersectionReport rep;
    rep.labeling = *chosen;
    rep.coefficients = {g1.representative * (g1.slope - g4.slope),
                        g2.representative * (g2.slope - g4.slope),
                        g3.representative * (g4.slope - g3.slope)};
    for (const auto& coef : rep.coefficients)
        if (coef.is_zero()) throw std::logic_error("ternary coefficient vanished");

    PointSet s12 = cluster_sum_points(g1, g2, a);
    PointSet s34 = cluster_sum_points(g3, g4, a);
    const PointSet& small = s12.size() <= s34.size() ? s12 : s34;
    const PointSet& large = s12.size() <= s34.size() ? s34 : s12;

    Point v1 = g1.rep_point(), v2 = g2.rep_point(), v3 = g3.rep_point();
    Scalar det12 = cross_det(v1, v2);
    std::set<std::array<Scalar, 3>> distinct;
    for (const auto& z : small) {
        if (!large.contains(z)) continue;
        Scalar ca = cross_det(z, v2) / det12;
        Scalar cb = cross_det(v1, z) / det12;
        // z also splits over (v3, v4); recover c the same way
        Scalar cc = cross_det(z, g4.rep_point()) / cross_det(v3, g4.rep_point());
        if (!(rep.coefficients[0] * ca + rep.coefficients[1] * cb +
              rep.coefficients[2] * cc)
                 .is_zero())
            throw std::logic_error("ternary equation violated by intersection point");
        distinct.insert({ca, cb, cc});
        rep.solutions.push_back({ca, cb, cc});
    }
    rep.count = rep.solutions.size();
    if (distinct.size() != rep.solutions.size())
        throw std::logic_error("intersection -> solution map not injective");
    return rep;
}

struct ClusterMuReport {
    std::uint64_t mu;           // distinct sum points across the cluster's pairs
    long long ie_lower_bound;   // |A|^2 C(M,2) - sum of pairwise intersections
    std::uint64_t pair_count;   // C(M,2)
    std::uint64_t intersection_sum;
    double ratio_vs_m2a2_over_8;  // mu / (M^2 |A|^2 / 8)
};

// mu(U) for a full cluster: the union of the pairwise sum-point sets, whose
// slopes all lie strictly between the cluster's extreme slopes.
inline ClusterMuReport cluster_mu(const Cluster& u, const ScalarSet& a,
                                  const CostGuard& guard = {}) {
    if (!u.full) throw std::domain_error("mu is defined on full clusters only");
    std::uint64_t m = u.slopes.size();
    std::uint64_t pairs = m * (m - 1) / 2;
    std::uint64_t a2 = static_cast<std::uint64_t>(a.size()) * a.size();
    guard.check(pairs * a2 + pairs * pairs * a2, "cluster mu");

    std::vector<PointSet> sums;
    sums.reserve(pairs);
    std::vector<Point> all;
    all.reserve(pairs * a2);
    for (std::size_t i = 0; i < u.slopes.size(); ++i)
        for (std::size_t j = i + 1; j < u.slopes.size(); ++j) {
            sums.push_back(cluster_sum_points(u.slopes[i], u.slopes[j], a));
            const auto& items = sums.back().items();
            all.insert(all.end(), items.begin(), items.end());
        }
    PointSet distinct(std::move(all));

    std::uint64_t inter_sum = 0;
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i + 1; j < sums.size(); ++j) {
            const PointSet& small = sums[i].size() <= sums[j].size() ? sums[i] : sums[j];
            const PointSet& large = sums[i].size() <= sums[j].size() ? sums[j] : sums[i];
            for (const auto& z : small)
                if (large.contains(z)) ++inter_sum;
        }

    ClusterMuReport rep{};
    rep.mu = distinct.size();
    rep.pair_count = pairs;
    rep.intersection_sum = inter_sum;
    rep.ie_lower_bound =
        static_cast<long long>(a2 * pairs) - static_cast<long long>(inter_sum);
    rep.ratio_vs_m2a2_over_8 =
        static_cast<double>(rep.mu) / (static_cast<double>(m * m) * a2 / 8.0);
    return rep;
}

}  // namespace bflab
