#pragma once

// Cross-ratios of scalars, of directions through the origin, and of planar
// points via triangle areas. r(a,b,c,d) = (a-b)(c-d) / ((a-c)(b-d)).

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"

namespace bflab {

// For pairwise-distinct inputs the value is defined and lies outside {0, 1}:
// numerator - denominator = (c-b)(a-d), so r = 1 would force b = c or a = d.
inline Scalar cross_ratio(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw std::domain_error("degenerate quadruple");
    return ((a - b) * (c - d)) / ((a - c) * (b - d));
}

// R(A) over ordered pairwise-distinct quadruples.
inline ScalarSet cross_ratio_set(const ScalarSet& a, const CostGuard& guard = {}) {
    if (a.size() < 4) throw std::domain_error("cross-ratio set requires |A| >= 4");
    std::uint64_t n = a.size();
    guard.check(n * n * n * n, "cross-ratio set");
    const auto& v = a.items();
    std::unordered_set<Scalar, ScalarHash> seen;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j == i) continue;
            Scalar ab = v[i] - v[j];
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k == i || k == j) continue;
                Scalar ac = v[i] - v[k];
                for (std::size_t l = 0; l < v.size(); ++l) {
                    if (l == i || l == j || l == k) continue;
                    seen.insert((ab * (v[k] - v[l])) / (ac * (v[j] - v[l])));
                }
            }
        }
    std::vector<Scalar> items(seen.begin(), seen.end());
    return ScalarSet(std::move(items));
}

// Cross-ratio of four concurrent lines, computed on homogeneous coordinates:
// with D(u,v) = u.a v.b - u.b v.a,
//   r = D(a,b) D(c,d) / (D(a,c) D(b,d)).
// This is the transversal construction with the infinite point's factors
// cleared algebraically, so no point at infinity is ever approximated, and
// the antipodal sign choices cancel in pairs.
inline Scalar cross_ratio_of_directions(const Direction& da, const Direction& db,
                                        const Direction& dc, const Direction& dd) {
    if (da == db || da == dc || da == dd || db == dc || db == dd || dc == dd)
        throw std::domain_error("degenerate quadruple of directions");
    auto det = [](const Direction& u, const Direction& v) {
        return mpz_class(u.a() * v.b() - u.b() * v.a());
    };
    return Scalar(det(da, db) * det(dc, dd), det(da, dc) * det(db, dd));
}

// t_ab t_cd / (t_ac t_bd): the cross-ratio of the four origin rays through
// the points, invariant under sliding each point along its ray.
inline Scalar area_cross_ratio(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
    Scalar tab = cross_det(a, b), tcd = cross_det(c, d);
    Scalar tac = cross_det(a, c), tbd = cross_det(b, d);
    if (tab.is_zero() || tcd.is_zero() || tac.is_zero() || tbd.is_zero())
        throw std::domain_error("collinear-with-origin pair");
    return (tab * tcd) / (tac * tbd);
}

}  // namespace bflab
