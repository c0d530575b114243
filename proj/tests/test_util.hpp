#pragma once

// Shared test inputs and independent brute-force oracles. The oracles use
// plain nested loops and std::set/std::map only, never the counting paths
// they are checking.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "bflab/bflab.hpp"

namespace testutil {

using namespace bflab;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long ints(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar rational(long num_range, long den_range) {
        return Scalar(ints(-num_range, num_range), ints(1, den_range));
    }

    Scalar nonzero_rational(long num_range, long den_range) {
        for (;;) {
            Scalar s = rational(num_range, den_range);
            if (!s.is_zero()) return s;
        }
    }

    Point point(long num_range, long den_range) {
        return Point{rational(num_range, den_range), rational(num_range, den_range)};
    }

    Point nonzero_point(long num_range, long den_range) {
        for (;;) {
            Point p = point(num_range, den_range);
            if (!p.is_origin()) return p;
        }
    }
};

inline ScalarSet random_rational_set(Rng& rng, std::size_t n, long num_range, long den_range,
                                     bool allow_zero = true) {
    std::set<Scalar> items;
    while (items.size() < n) {
        Scalar s = rng.rational(num_range, den_range);
        if (!allow_zero && s.is_zero()) continue;
        items.insert(s);
    }
    return ScalarSet(std::vector<Scalar>(items.begin(), items.end()));
}

inline ScalarSet random_int_set(Rng& rng, std::size_t n, long bound, bool allow_zero = true) {
    std::set<Scalar> items;
    while (items.size() < n) {
        Scalar s(rng.ints(-bound, bound));
        if (!allow_zero && s.is_zero()) continue;
        items.insert(s);
    }
    return ScalarSet(std::vector<Scalar>(items.begin(), items.end()));
}

inline PointSet random_point_set(Rng& rng, std::size_t n, long coord_bound,
                                 bool avoid_origin = true) {
    std::set<Point> items;
    while (items.size() < n) {
        Point p{Scalar(rng.ints(-coord_bound, coord_bound)),
                Scalar(rng.ints(-coord_bound, coord_bound))};
        if (avoid_origin && p.is_origin()) continue;
        items.insert(p);
    }
    return PointSet(std::vector<Point>(items.begin(), items.end()));
}

inline Scalar apply(const Scalar& x, const Scalar& y, SetOpKind op) {
    switch (op) {
        case SetOpKind::sum: return x + y;
        case SetOpKind::difference: return x - y;
        case SetOpKind::product: return x * y;
        case SetOpKind::ratio: return x / y;
    }
    throw std::logic_error("bad op");
}

inline ScalarSet brute_combine(const ScalarSet& a, const ScalarSet& b, SetOpKind op) {
    std::set<Scalar> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(apply(x, y, op));
    return ScalarSet(std::vector<Scalar>(out.begin(), out.end()));
}

inline std::map<Scalar, std::uint64_t> brute_table(const ScalarSet& a, const ScalarSet& b,
                                                   SetOpKind op) {
    std::map<Scalar, std::uint64_t> out;
    for (const auto& x : a)
        for (const auto& y : b) ++out[apply(x, y, op)];
    return out;
}

inline std::uint64_t brute_additive_energy(const ScalarSet& a, const ScalarSet& b) {
    std::uint64_t n = 0;
    for (const auto& a1 : a)
        for (const auto& b1 : b)
            for (const auto& a2 : a)
                for (const auto& b2 : b)
                    if (a1 + b1 == a2 + b2) ++n;
    return n;
}

inline std::uint64_t brute_form_energy(const PointSet& p, const BilinearForm& f) {
    std::uint64_t n = 0;
    for (const auto& q : p)
        for (const auto& q2 : p)
            for (const auto& r : p)
                for (const auto& r2 : p) {
                    Scalar lhs = f.eval(q, q2);
                    if (!lhs.is_zero() && lhs == f.eval(r, r2)) ++n;
                }
    return n;
}

inline std::uint64_t brute_pinned_energy(const PointSet& pins, const PointSet& targets,
                                         const BilinearForm& f) {
    std::uint64_t n = 0;
    for (const auto& q : pins)
        for (const auto& q2 : targets)
            for (const auto& r2 : targets) {
                Scalar lhs = f.eval(q, q2);
                if (!lhs.is_zero() && lhs == f.eval(q, r2)) ++n;
            }
    return n;
}

inline std::uint64_t brute_distance_energy(const PointSet& p) {
    auto d2 = [](const Point& a, const Point& b) {
        Scalar dx = a.x - b.x, dy = a.y - b.y;
        return dx * dx + dy * dy;
    };
    std::uint64_t n = 0;
    for (const auto& q : p)
        for (const auto& q2 : p)
            for (const auto& r : p)
                for (const auto& r2 : p) {
                    Scalar lhs = d2(q, q2);
                    if (!lhs.is_zero() && lhs == d2(r, r2)) ++n;
                }
    return n;
}

inline std::uint64_t brute_teq(const ScalarSet& t) {
    std::uint64_t n = 0;
    for (const auto& t1 : t)
        for (const auto& t2 : t)
            for (const auto& t3 : t)
                for (const auto& t4 : t)
                    for (const auto& t5 : t)
                        for (const auto& t6 : t)
                            if (t1 * t2 == t3 * t4 - t5 * t6) ++n;
    return n;
}

inline std::uint64_t brute_affine_product(const ScalarSet& a, const ScalarSet& b,
                                          const ScalarSet& c, const ScalarSet& d) {
    std::uint64_t n = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            for (const auto& z : c)
                for (const auto& w : d)
                    if (x - y == z * w) ++n;
    return n;
}

inline std::uint64_t brute_ternary(const ScalarSet& a, const Scalar& x1, const Scalar& x2,
                                   const Scalar& x3) {
    std::uint64_t n = 0;
    for (const auto& a1 : a)
        for (const auto& a2 : a)
            for (const auto& a3 : a)
                if ((x1 * a1 + x2 * a2 + x3 * a3).is_zero()) ++n;
    return n;
}

// Second, independently ordered enumeration of R(A): reversed index order,
// the textbook formula inline, std::set for dedup.
inline ScalarSet brute_cross_ratio_set(const ScalarSet& a) {
    const auto& v = a.items();
    std::set<Scalar> out;
    auto n = static_cast<long>(v.size());
    for (long l = n - 1; l >= 0; --l)
        for (long k = n - 1; k >= 0; --k)
            for (long j = n - 1; j >= 0; --j)
                for (long i = n - 1; i >= 0; --i) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    out.insert(((v[i] - v[j]) * (v[k] - v[l])) /
                               ((v[i] - v[k]) * (v[j] - v[l])));
                }
    return ScalarSet(std::vector<Scalar>(out.begin(), out.end()));
}

inline std::uint64_t brute_incidences(const std::vector<WeightedPoint>& pts,
                                      const std::vector<WeightedLine>& lines) {
    std::uint64_t n = 0;
    for (const auto& wp : pts)
        for (const auto& l : lines)
            if (l.contains(wp.p)) n += wp.weight * l.weight();
    return n;
}

}  // namespace testutil
