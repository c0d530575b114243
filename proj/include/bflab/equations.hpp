#pragma once

// Exact solution counters: a - b = cd, the six-variable product equation
// t1 t2 = t3 t4 - t5 t6, ternary linear equations, weighted point-line
// incidences, and fixed form values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"
#include "bflab/setops.hpp"
#include "bflab/textio.hpp"

namespace bflab {

namespace detail {

inline std::uint64_t checked_u64(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error(std::string(what) + ": count exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace detail

// The line a*x + b*y = c with a positive integer weight. Canonical scaling:
// integer coefficients, gcd 1, first nonzero of (a, b, c) positive, so equal
// lines compare equal.
class WeightedLine {
public:
    WeightedLine(const Scalar& a, const Scalar& b, const Scalar& c, std::uint64_t weight = 1)
        : weight_(weight) {
        if (a.is_zero() && b.is_zero()) throw std::domain_error("degenerate line: a = b = 0");
        if (weight < 1) throw std::domain_error("line weight must be >= 1");
        mpz_class l = lcm(lcm(a.denominator(), b.denominator()), c.denominator());
        a_ = a.numerator() * (l / a.denominator());
        b_ = b.numerator() * (l / b.denominator());
        c_ = c.numerator() * (l / c.denominator());
        mpz_class g = gcd(gcd(abs(a_), abs(b_)), abs(c_));
        a_ /= g;
        b_ /= g;
        c_ /= g;
        int lead = sgn(a_) != 0 ? sgn(a_) : (sgn(b_) != 0 ? sgn(b_) : sgn(c_));
        if (lead < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
    }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    std::uint64_t weight() const { return weight_; }

    bool contains(const Point& p) const {
        return Scalar(a_) * p.x + Scalar(b_) * p.y == Scalar(c_);
    }

    friend bool operator==(const WeightedLine& l, const WeightedLine& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
    }
    friend bool operator<(const WeightedLine& l, const WeightedLine& r) {
        if (int c = cmp(l.a_, r.a_); c != 0) return c < 0;
        if (int c = cmp(l.b_, r.b_); c != 0) return c < 0;
        return cmp(l.c_, r.c_) < 0;
    }

private:
    mpz_class a_, b_, c_;
    std::uint64_t weight_;
};

// Line files: rows "a b c [weight]".
inline std::vector<WeightedLine> read_lines(std::istream& in) {
    std::vector<WeightedLine> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        auto toks = detail::tokenize(line);
        if (toks.size() != 3 && toks.size() != 4)
            throw std::domain_error("line " + std::to_string(lineno) +
                                    ": expected 'a b c [weight]'");
        std::uint64_t w = 1;
        if (toks.size() == 4) {
            try {
                w = std::stoull(toks[3]);
            } catch (...) {
                throw std::domain_error("line " + std::to_string(lineno) + ": bad weight");
            }
        }
        lines.emplace_back(Scalar::parse(toks[0]), Scalar::parse(toks[1]),
                           Scalar::parse(toks[2]), w);
    }
    return lines;
}

struct WeightedPoint {
    Point p;
    std::uint64_t weight = 1;
};

struct IncidenceReport {
    std::uint64_t incidences;  // sum of w(p) w(l) over incident pairs
    std::uint64_t w_p_max, w_l_max;
    std::uint64_t total_p, total_l;  // L1 weight norms
    double st_constant;
    double bound;  // st_constant * ((wP wL)^(1/3) (WP WL)^(2/3) + wP WL + wL WP)
    double ratio;
};

// #solutions of a - b = cd over A x B x C x D, via the difference table of
// (A, B) against the product table of (C, D).
inline std::uint64_t count_affine_product(const ScalarSet& a, const ScalarSet& b,
                                          const ScalarSet& c, const ScalarSet& d,
                                          const CostGuard& guard = {}) {
    if (a.empty() || b.empty() || c.empty() || d.empty())
        throw std::domain_error("count_affine_product: empty input set");
    CountTable diff = representation_table(a, b, SetOpKind::difference, guard);
    CountTable prod = representation_table(c, d, SetOpKind::product, guard);
    const auto& small = diff.distinct() <= prod.distinct() ? diff : prod;
    const auto& large = diff.distinct() <= prod.distinct() ? prod : diff;
    unsigned __int128 total = 0;
    for (const auto& [s, n] : small.raw()) total += static_cast<unsigned __int128>(n) * large.at(s);
    return detail::checked_u64(total, "count_affine_product");
}

// #{(t1..t6) in T^6 : t1 t2 = t3 t4 - t5 t6} via the product table r2:
// sum over (u, v) of r2(u - v) r2(u) r2(v).
inline std::uint64_t count_teq(const ScalarSet& t, const CostGuard& guard = {}) {
    if (t.empty()) throw std::domain_error("count_teq: empty input set");
    CountTable r2 = representation_table(t, t, SetOpKind::product, guard);
    auto entries = r2.sorted_entries();
    std::uint64_t k = entries.size();
    guard.check(k * k, "product-pair scan of t1t2 = t3t4 - t5t6");
    unsigned __int128 total = 0;
    for (const auto& [u, cu] : entries)
        for (const auto& [v, cv] : entries) {
            std::uint64_t cs = r2.at(u - v);
            if (cs)
                total += static_cast<unsigned __int128>(cs) * cu * cv;
        }
    return detail::checked_u64(total, "count_teq");
}

// #{(a1,a2,a3) in A^3 : x1 a1 + x2 a2 + x3 a3 = 0} with nonzero coefficients.
inline std::uint64_t count_ternary_linear(const ScalarSet& a, const Scalar& x1,
                                          const Scalar& x2, const Scalar& x3,
                                          const CostGuard& guard = {}) {
    if (a.empty()) throw std::domain_error("count_ternary_linear: empty input set");
    if (x1.is_zero() || x2.is_zero() || x3.is_zero())
        throw std::domain_error("count_ternary_linear: zero coefficient");
    std::uint64_t n = a.size();
    guard.check(n * n, "ternary linear equation");
    std::uint64_t total = 0;
    for (const auto& a1 : a)
        for (const auto& a2 : a) {
            Scalar a3 = -(x1 * a1 + x2 * a2) / x3;
            if (a.contains(a3)) ++total;
        }
    return total;
}

// Weighted incidences between points and canonical lines. Points are grouped
// by x-coordinate, so each line costs one lookup per distinct abscissa.
inline IncidenceReport count_incidences(const std::vector<WeightedPoint>& points,
                                        std::vector<WeightedLine> lines,
                                        double st_constant = 4.0,
                                        const CostGuard& guard = {}) {
    {
        auto sorted = lines;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw std::domain_error("duplicate line after canonicalization: " +
                                        sorted[i].a().get_str() + " " +
                                        sorted[i].b().get_str() + " " +
                                        sorted[i].c().get_str());
    }
    // x -> (y -> weight), duplicate points merge by weight
    std::unordered_map<Scalar, std::unordered_map<Scalar, std::uint64_t, ScalarHash>,
                       ScalarHash>
        columns;
    std::unordered_map<Scalar, std::uint64_t, ScalarHash> column_weight;
    std::uint64_t w_p_max = 0, total_p = 0;
    for (const auto& wp : points) {
        if (wp.weight < 1) throw std::domain_error("point weight must be >= 1");
        columns[wp.p.x][wp.p.y] += wp.weight;
        column_weight[wp.p.x] += wp.weight;
        total_p += wp.weight;
    }
    for (const auto& [x, ys] : columns)
        for (const auto& [y, w] : ys) w_p_max = std::max(w_p_max, w);
    guard.check(static_cast<std::uint64_t>(lines.size()) * std::max<std::size_t>(columns.size(), 1),
                "incidence scan");

    std::uint64_t w_l_max = 0, total_l = 0;
    unsigned __int128 hits = 0;
    for (const auto& l : lines) {
        w_l_max = std::max(w_l_max, l.weight());
        total_l += l.weight();
        Scalar a(l.a()), b(l.b()), c(l.c());
        if (l.b() == 0) {
            Scalar x = c / a;
            auto it = column_weight.find(x);
            if (it != column_weight.end())
                hits += static_cast<unsigned __int128>(it->second) * l.weight();
            continue;
        }
        for (const auto& [x, ys] : columns) {
            Scalar y = (c - a * x) / b;
            auto it = ys.find(y);
            if (it != ys.end()) hits += static_cast<unsigned __int128>(it->second) * l.weight();
        }
    }
    IncidenceReport rep{};
    rep.incidences = detail::checked_u64(hits, "count_incidences");
    rep.w_p_max = w_p_max;
    rep.w_l_max = w_l_max;
    rep.total_p = total_p;
    rep.total_l = total_l;
    rep.st_constant = st_constant;
    double wp = static_cast<double>(w_p_max), wl = static_cast<double>(w_l_max);
    double WP = static_cast<double>(total_p), WL = static_cast<double>(total_l);
    rep.bound = st_constant * (std::cbrt(wp * wl) * std::cbrt((WP * WL) * (WP * WL)) +
                               wp * WL + wl * WP);
    rep.ratio = rep.bound > 0 ? static_cast<double>(rep.incidences) / rep.bound : 0.0;
    return rep;
}

inline IncidenceReport count_incidences(const PointSet& points,
                                        const std::vector<WeightedLine>& lines,
                                        double st_constant = 4.0,
                                        const CostGuard& guard = {}) {
    std::vector<WeightedPoint> wps;
    wps.reserve(points.size());
    for (const auto& p : points) wps.push_back(WeightedPoint{p, 1});
    return count_incidences(wps, lines, st_constant, guard);
}

// #{(q, q') in P x Q : w(q, q') = c}, c != 0.
inline std::uint64_t count_form_value(const PointSet& p, const PointSet& q,
                                      const BilinearForm& form, const Scalar& c,
                                      const CostGuard& guard = {}) {
    if (c.is_zero())
        throw std::domain_error("count_form_value: value must be nonzero");
    std::uint64_t pairs = static_cast<std::uint64_t>(p.size()) * q.size();
    guard.check(pairs, "form value count");
    std::uint64_t total = 0;
    for (const auto& x : p)
        for (const auto& y : q)
            if (form.eval(x, y) == c) ++total;
    return total;
}

}  // namespace bflab
