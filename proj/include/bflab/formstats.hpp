#pragma once

// Statistics of a bilinear form over a planar point set: the value set
// T(P), form energy, pinned energy, distance energy, and the rich/poor
// split of origin-line fibers. Ordered pairs/triples/quadruples throughout;
// the pinned count includes the diagonal q' = r'.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"

namespace bflab {

namespace detail {

inline void require_punctured(const PointSet& p) {
    if (p.contains_origin())
        throw std::domain_error("point set must not contain the origin");
}

}  // namespace detail

// Multiplicity table of the nonzero values of the form over ordered pairs.
inline CountTable form_value_table(const PointSet& p, const BilinearForm& form,
                                   const CostGuard& guard = {}) {
    detail::require_punctured(p);
    std::uint64_t pairs = static_cast<std::uint64_t>(p.size()) * p.size();
    guard.check(pairs, "form value table");
    CountTable table;
    for (const auto& q : p)
        for (const auto& r : p) {
            Scalar t = form.eval(q, r);
            if (!t.is_zero()) table.add(t);
        }
    return table;
}

// T(P): the set of nonzero values over ordered pairs. Empty exactly when a
// skew form meets a set supported on a single line through the origin.
inline ScalarSet value_set(const PointSet& p, const BilinearForm& form,
                           const CostGuard& guard = {}) {
    return form_value_table(p, form, guard).keys();
}

// #{(q,q',r,r') : w(q,q') = w(r,r') != 0}, the second moment of the value table.
inline std::uint64_t form_energy(const PointSet& p, const BilinearForm& form,
                                 const CostGuard& guard = {}) {
    return form_value_table(p, form, guard).second_moment();
}

// #{(q,q',r') : w(q,q') = w(q,r') != 0}, diagonal q' = r' included.
// Cross variant: q ranges over `pins`, q' and r' over `targets`.
inline std::uint64_t pinned_form_energy(const PointSet& pins, const PointSet& targets,
                                        const BilinearForm& form, const CostGuard& guard = {}) {
    detail::require_punctured(pins);
    detail::require_punctured(targets);
    std::uint64_t pairs = static_cast<std::uint64_t>(pins.size()) * targets.size();
    guard.check(pairs, "pinned form energy");
    std::uint64_t total = 0;
    for (const auto& q : pins) {
        CountTable per_pin;
        for (const auto& r : targets) {
            Scalar t = form.eval(q, r);
            if (!t.is_zero()) per_pin.add(t);
        }
        total += per_pin.second_moment();
    }
    return total;
}

inline std::uint64_t pinned_form_energy(const PointSet& p, const BilinearForm& form,
                                        const CostGuard& guard = {}) {
    return pinned_form_energy(p, p, form, guard);
}

// #{(q,q',r,r') : |q-q'|^2 = |r-r'|^2 != 0}. Squared Euclidean distances keep
// everything rational; the compared equalities are unaffected. The origin is
// allowed here.
inline std::uint64_t distance_energy(const PointSet& p, const CostGuard& guard = {}) {
    std::uint64_t pairs = static_cast<std::uint64_t>(p.size()) * p.size();
    guard.check(pairs, "distance energy");
    CountTable table;
    for (const auto& q : p)
        for (const auto& r : p) {
            Scalar dx = q.x - r.x, dy = q.y - r.y;
            Scalar d2 = dx * dx + dy * dy;
            if (!d2.is_zero()) table.add(d2);
        }
    return table.second_moment();
}

// Fibers of P under direction_of, in canonical direction order.
inline std::map<Direction, std::vector<Point>> direction_fibers(const PointSet& p) {
    detail::require_punctured(p);
    std::map<Direction, std::vector<Point>> fibers;
    for (const auto& q : p) fibers[direction_of(q)].push_back(q);
    return fibers;
}

struct RichPoorSplit {
    PointSet poor;  // every origin-line fiber has <= threshold points
    PointSet rich;  // every origin-line fiber has > threshold points
    std::uint64_t threshold;
};

inline RichPoorSplit split_by_line_richness(const PointSet& p, std::uint64_t w0) {
    if (w0 < 1) throw std::domain_error("richness threshold must be >= 1");
    std::vector<Point> poor, rich;
    for (auto& [dir, pts] : direction_fibers(p)) {
        auto& dst = pts.size() <= w0 ? poor : rich;
        dst.insert(dst.end(), pts.begin(), pts.end());
    }
    return RichPoorSplit{PointSet(std::move(poor)), PointSet(std::move(rich)), w0};
}

// t_ad t_cb = t_ab t_cd - t_ac t_bd, with t_xy the signed area det(x y).
// Holds identically; exposed as the oracle for the identity suite.
inline bool area_identity_holds(const Point& a, const Point& b, const Point& c,
                                const Point& d) {
    return cross_det(a, d) * cross_det(c, b) ==
           cross_det(a, b) * cross_det(c, d) - cross_det(a, c) * cross_det(b, d);
}

}  // namespace bflab
