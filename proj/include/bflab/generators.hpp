#pragma once

// Deterministic input families: progressions, grids, seeded random integer
// sets, and the grid-plus-pencil construction with exact lattice counting.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"

namespace bflab {

enum class ProgressionKind { arithmetic, geometric };

inline ScalarSet make_progression(ProgressionKind kind, const Scalar& start,
                                  const Scalar& step, std::uint64_t n) {
    if (n < 2) throw std::domain_error("progression needs n >= 2");
    if (kind == ProgressionKind::arithmetic) {
        if (step.is_zero()) throw std::domain_error("degenerate arithmetic step 0");
    } else {
        if (start.is_zero()) throw std::domain_error("geometric progression needs start != 0");
        if (step.is_zero() || step == Scalar(1) || step == Scalar(-1))
            throw std::domain_error("degenerate geometric ratio (0, 1 or -1)");
    }
    std::vector<Scalar> items;
    items.reserve(n);
    Scalar cur = start;
    for (std::uint64_t i = 0; i < n; ++i) {
        items.push_back(cur);
        cur = kind == ProgressionKind::arithmetic ? cur + step : cur * step;
    }
    ScalarSet out(std::move(items));
    if (out.size() != n) throw std::logic_error("progression collapsed");
    return out;
}

inline PointSet make_grid(const ScalarSet& a, const ScalarSet& b, bool puncture) {
    if (a.empty() || b.empty()) throw std::domain_error("grid factors must be nonempty");
    std::vector<Point> items;
    items.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            if (puncture && x.is_zero() && y.is_zero()) continue;
            items.push_back(Point{x, y});
        }
    return PointSet(std::move(items));
}

// n distinct nonzero integers in [-bound, bound], reproducible from the seed.
// Generator: mt19937_64(seed); each draw u = engine() % (2*bound) maps to
// u - bound for u < bound and u - bound + 1 otherwise; draws repeat until n
// distinct values accumulate.
inline ScalarSet random_set(std::uint64_t seed, std::uint64_t n, std::uint64_t bound) {
    if (bound < 1) throw std::domain_error("random set needs bound >= 1");
    if (n > 2 * bound)
        throw std::domain_error("random set infeasible: n > 2*bound nonzero values");
    std::mt19937_64 engine(seed);
    std::set<long> picked;
    while (picked.size() < n) {
        std::uint64_t u = engine() % (2 * bound);
        long v = u < bound ? static_cast<long>(u) - static_cast<long>(bound)
                           : static_cast<long>(u - bound) + 1;
        picked.insert(v);
    }
    std::vector<Scalar> items;
    items.reserve(n);
    for (long v : picked) items.emplace_back(v);
    return ScalarSet(std::move(items));
}

namespace detail {

inline __int128 floor_div128(__int128 a, __int128 b) {
    // b > 0
    __int128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline __int128 ceil_div128(__int128 a, __int128 b) {
    // b > 0
    __int128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// Solutions t of lo <= base + t*k <= hi, k != 0, as [tlo, thi].
inline void t_interval(__int128 base, long k, long lo, long hi, __int128& tlo,
                       __int128& thi) {
    __int128 a = static_cast<__int128>(lo) - base;
    __int128 b = static_cast<__int128>(hi) - base;
    if (k > 0) {
        tlo = ceil_div128(a, k);
        thi = floor_div128(b, k);
    } else {
        tlo = ceil_div128(-b, -static_cast<__int128>(k));
        thi = floor_div128(-a, -static_cast<__int128>(k));
    }
}

}  // namespace detail

// #{(x,y) in [-s,s]^2 : cx*x + cy*y = rhs}, exactly.
inline std::uint64_t lattice_segment_count(long cx, long cy, long rhs, long s) {
    if (s < 0) return 0;
    if (cx == 0 && cy == 0) {
        return rhs == 0 ? static_cast<std::uint64_t>(2 * s + 1) * (2 * s + 1) : 0;
    }
    auto axis_count = [s](long coef, long r) -> std::uint64_t {
        if (r % coef != 0) return 0;
        long v = r / coef;
        return (v >= -s && v <= s) ? static_cast<std::uint64_t>(2 * s + 1) : 0;
    };
    if (cx == 0) return axis_count(cy, rhs);
    if (cy == 0) return axis_count(cx, rhs);
    long g = std::gcd(std::abs(cx), std::abs(cy));
    if (rhs % g != 0) return 0;
    cx /= g;
    cy /= g;
    rhs /= g;
    // base solution from the extended gcd: u0*|cx| + v0*|cy| = 1
    long r0 = std::abs(cx), r1 = std::abs(cy), u0 = 1, u1 = 0;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1, u2 = u0 - q * u1;
        r0 = r1; r1 = r2; u0 = u1; u1 = u2;
    }
    __int128 x0 = static_cast<__int128>(u0) * (cx < 0 ? -1 : 1) * rhs;
    __int128 y0 = (static_cast<__int128>(rhs) - static_cast<__int128>(cx) * x0) / cy;
    // general solution: x = x0 + t*cy, y = y0 - t*cx
    __int128 t1lo, t1hi, t2lo, t2hi;
    detail::t_interval(x0, cy, -s, s, t1lo, t1hi);
    detail::t_interval(y0, -cx, -s, s, t2lo, t2hi);
    __int128 lo = t1lo > t2lo ? t1lo : t2lo;
    __int128 hi = t1hi < t2hi ? t1hi : t2hi;
    return hi >= lo ? static_cast<std::uint64_t>(hi - lo + 1) : 0;
}

// #{p in P : b*x - a*y = offset} by direct enumeration.
inline std::uint64_t line_support_count(const Direction& d, const Scalar& offset,
                                        const PointSet& p) {
    Scalar a(mpz_class(d.a())), b(mpz_class(d.b()));
    std::uint64_t n = 0;
    for (const auto& q : p)
        if (b * q.x - a * q.y == offset) ++n;
    return n;
}

// Analytic count of b*x - a*y = offset over the integer box [-s,s]^2,
// optionally with the origin removed.
inline std::uint64_t lattice_line_count(const Direction& d, long offset, long s,
                                        bool punctured) {
    std::uint64_t n = lattice_segment_count(d.b().get_si(), -d.a().get_si(), offset, s);
    if (punctured && offset == 0 && n > 0) --n;  // the origin lies on every central line
    return n;
}

// Analytic count of b*x + a*y = rhs over the box; for rhs != 0 the origin is
// never on the line.
inline std::uint64_t lattice_dot_count(const Direction& d, long rhs, long s) {
    return lattice_segment_count(d.b().get_si(), d.a().get_si(), rhs, s);
}

// Grid P1 = [-sqrt(N), sqrt(N)]^2 minus the origin; pencil of primitive
// directions in the sixth-root box; translate offsets m = b*i - a*j != 0 over
// |i|,|j| <= sqrt(N)/2; rational family P2 = {(b/m, a/m)}.
struct ConstructionBundle {
    long n;           // the parameter N, a sixth power of an even integer
    long sqrt_n;      // N^(1/2)
    long sixth_root;  // N^(1/6)
    long half;        // sqrt(N)/2
    PointSet p1;
    std::vector<Direction> pencil;
    std::vector<std::pair<Direction, std::vector<long>>> translates;
    PointSet p2;
};

inline ConstructionBundle erdos_construction(long n_param) {
    if (n_param < 1 || n_param > (1L << 50))
        throw std::domain_error("construction parameter " + std::to_string(n_param) +
                                " out of range");
    auto sixth = [](long k) { return static_cast<__int128>(k) * k * k * k * k * k; };
    long s6 = 1;
    while (sixth(s6) < n_param) ++s6;
    if (sixth(s6) != n_param || s6 % 2 != 0)
        throw std::domain_error("construction parameter " + std::to_string(n_param) +
                                " must be a 6th power of an even integer");
    ConstructionBundle bundle;
    bundle.n = n_param;
    bundle.sixth_root = s6;
    bundle.sqrt_n = s6 * s6 * s6;
    bundle.half = bundle.sqrt_n / 2;

    std::vector<Point> grid;
    grid.reserve(static_cast<std::size_t>(2 * bundle.sqrt_n + 1) * (2 * bundle.sqrt_n + 1));
    for (long x = -bundle.sqrt_n; x <= bundle.sqrt_n; ++x)
        for (long y = -bundle.sqrt_n; y <= bundle.sqrt_n; ++y) {
            if (x == 0 && y == 0) continue;
            grid.push_back(Point{Scalar(x), Scalar(y)});
        }
    bundle.p1 = PointSet(std::move(grid));

    for (long a = 0; a <= s6; ++a) {
        if (a == 0) {
            bundle.pencil.emplace_back(0L, 1L);
            continue;
        }
        for (long b = -s6; b <= s6; ++b)
            if (std::gcd(a, std::abs(b)) == 1) bundle.pencil.emplace_back(a, b);
    }
    std::sort(bundle.pencil.begin(), bundle.pencil.end());

    std::vector<Point> family;
    for (const auto& dir : bundle.pencil) {
        long a = dir.a().get_si(), b = dir.b().get_si();
        std::set<long> offsets;
        for (long i = -bundle.half; i <= bundle.half; ++i)
            for (long j = -bundle.half; j <= bundle.half; ++j) {
                long m = b * i - a * j;
                if (m != 0) offsets.insert(m);
            }
        std::vector<long> ms(offsets.begin(), offsets.end());
        for (long m : ms) family.push_back(Point{Scalar(b, m), Scalar(a, m)});
        bundle.translates.emplace_back(dir, std::move(ms));
    }
    bundle.p2 = PointSet(std::move(family));
    return bundle;
}

// Smallest number of P1 points supported by a pencil line.
inline std::uint64_t bundle_min_pencil_support(const ConstructionBundle& bundle) {
    std::uint64_t best = UINT64_MAX;
    for (const auto& dir : bundle.pencil)
        best = std::min(best, lattice_line_count(dir, 0, bundle.sqrt_n, true));
    return best;
}

// S(N) = #{(q, q') in P1 x P2 : q . q' = 1}. For q' = (b/m, a/m) the
// solutions q are the lattice points of b*x + a*y = m in the grid box.
inline std::uint64_t bundle_dot_solution_count(const ConstructionBundle& bundle) {
    std::uint64_t total = 0;
    for (const auto& [dir, offsets] : bundle.translates)
        for (long m : offsets) total += lattice_dot_count(dir, m, bundle.sqrt_n);
    return total;
}

// #{(q, q', r') : q in P2, q', r' in P1, q.q' = q.r' != 0}. For fixed
// q = (b/m, a/m) the value table over P1 is v -> #{b*x + a*y = v}, v != 0,
// independently of m, so the sum collapses to one pass per pencil direction.
inline std::uint64_t bundle_pinned_cross_count(const ConstructionBundle& bundle) {
    std::uint64_t total = 0;
    for (const auto& [dir, offsets] : bundle.translates) {
        long reach =
            (std::abs(dir.a().get_si()) + std::abs(dir.b().get_si())) * bundle.sqrt_n;
        std::uint64_t per_pin = 0;
        for (long v = -reach; v <= reach; ++v) {
            if (v == 0) continue;
            std::uint64_t c = lattice_dot_count(dir, v, bundle.sqrt_n);
            per_pin += c * c;
        }
        total += per_pin * offsets.size();
    }
    return total;
}

}  // namespace bflab
