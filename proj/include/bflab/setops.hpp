#pragma once

// Arithmetic on scalar sets: sum/difference/product/ratio sets,
// representation tables, additive energy, and the weak Erdos-Szemeredi
// report.
//
// Sets whose elements are all small integers take an int64 path (dense bitmap
// when the value range is narrow, hash set otherwise). The generic path works
// over exact rationals. Both produce identical values; tests enforce this.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bflab/guard.hpp"
#include "bflab/sets.hpp"

namespace bflab {

enum class SetOpKind { sum, difference, product, ratio };

inline const char* setop_name(SetOpKind op) {
    switch (op) {
        case SetOpKind::sum: return "sum";
        case SetOpKind::difference: return "difference";
        case SetOpKind::product: return "product";
        case SetOpKind::ratio: return "ratio";
    }
    return "?";
}

inline SetOpKind parse_setop(std::string_view name) {
    if (name == "sum") return SetOpKind::sum;
    if (name == "diff" || name == "difference") return SetOpKind::difference;
    if (name == "prod" || name == "product") return SetOpKind::product;
    if (name == "ratio") return SetOpKind::ratio;
    throw std::domain_error("unknown set operation '" + std::string(name) + "'");
}

namespace detail {

// All elements as small integers, if the set is integral and bounded.
inline std::optional<std::vector<long>> small_ints(const ScalarSet& s, long limit) {
    std::vector<long> out;
    out.reserve(s.size());
    for (const auto& x : s) {
        auto v = x.as_long();
        if (!v || *v > limit || *v < -limit) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

constexpr long kAddLimit = 1L << 45;       // sums/differences stay well inside int64
constexpr long kMulLimit = 3'000'000'000L; // products stay inside int64
constexpr long kDenseRange = 1L << 27;     // dense bitmap cutoff (16 MiB of bits)

// hi - lo without signed overflow (the true width always fits 64 bits)
inline std::uint64_t range_width(long lo, long hi) {
    return static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
}

struct DenseBits {
    long lo;
    std::vector<std::uint64_t> bits;
    explicit DenseBits(long lo, long hi) : lo(lo), bits(range_width(lo, hi) / 64 + 1, 0) {}
    void set(long v) {
        std::uint64_t i = static_cast<std::uint64_t>(v - lo);
        bits[i >> 6] |= 1ull << (i & 63);
    }
    std::uint64_t popcount() const {
        std::uint64_t n = 0;
        for (std::uint64_t w : bits) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return n;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < bits.size(); ++w) {
            std::uint64_t word = bits[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f(lo + static_cast<long>(w * 64 + b));
                word &= word - 1;
            }
        }
    }
};

template <typename F>
inline void int_pairs(const std::vector<long>& a, const std::vector<long>& b, SetOpKind op,
                      F&& f) {
    switch (op) {
        case SetOpKind::sum:
            for (long x : a)
                for (long y : b) f(x + y);
            break;
        case SetOpKind::difference:
            for (long x : a)
                for (long y : b) f(x - y);
            break;
        case SetOpKind::product:
            for (long x : a)
                for (long y : b) f(x * y);
            break;
        case SetOpKind::ratio:
            break;  // ratios leave the integers; generic path only
    }
}

inline void int_range(const std::vector<long>& a, const std::vector<long>& b, SetOpKind op,
                      long& lo, long& hi) {
    // items() are sorted ascending, so extremes come from the corners
    long amin = a.front(), amax = a.back(), bmin = b.front(), bmax = b.back();
    switch (op) {
        case SetOpKind::sum:
            lo = amin + bmin;
            hi = amax + bmax;
            break;
        case SetOpKind::difference:
            lo = amin - bmax;
            hi = amax - bmin;
            break;
        default: {
            lo = hi = a.front() * b.front();
            for (long x : {amin, amax})
                for (long y : {bmin, bmax}) {
                    lo = std::min(lo, x * y);
                    hi = std::max(hi, x * y);
                }
            break;
        }
    }
}

inline std::optional<std::pair<std::vector<long>, std::vector<long>>> int_operands(
    const ScalarSet& a, const ScalarSet& b, SetOpKind op) {
    if (op == SetOpKind::ratio) return std::nullopt;
    long limit = op == SetOpKind::product ? kMulLimit : kAddLimit;
    auto ia = small_ints(a, limit);
    if (!ia) return std::nullopt;
    auto ib = small_ints(b, limit);
    if (!ib) return std::nullopt;
    return std::make_pair(std::move(*ia), std::move(*ib));
}

inline Scalar apply_op(const Scalar& x, const Scalar& y, SetOpKind op) {
    switch (op) {
        case SetOpKind::sum: return x + y;
        case SetOpKind::difference: return x - y;
        case SetOpKind::product: return x * y;
        case SetOpKind::ratio: return x / y;
    }
    throw std::logic_error("unreachable");
}

inline void check_combine_pre(const ScalarSet& a, const ScalarSet& b, SetOpKind op) {
    if (a.empty() || b.empty()) throw std::domain_error("set operation on an empty set");
    if (op == SetOpKind::ratio && b.contains_zero())
        throw std::domain_error("ratio set: division by zero (divisor 0 present)");
}

}  // namespace detail

inline std::uint64_t combine_cardinality(const ScalarSet& a, const ScalarSet& b, SetOpKind op,
                                         const CostGuard& guard = {}) {
    detail::check_combine_pre(a, b, op);
    std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    guard.check(pairs, std::string(setop_name(op)) + " set");
    if (auto ints = detail::int_operands(a, b, op)) {
        const auto& [ia, ib] = *ints;
        long lo, hi;
        detail::int_range(ia, ib, op, lo, hi);
        if (detail::range_width(lo, hi) <= static_cast<std::uint64_t>(detail::kDenseRange)) {
            detail::DenseBits bits(lo, hi);
            detail::int_pairs(ia, ib, op, [&](long v) { bits.set(v); });
            return bits.popcount();
        }
        std::unordered_set<long> seen;
        seen.reserve(std::min<std::uint64_t>(pairs, 1u << 22));
        detail::int_pairs(ia, ib, op, [&](long v) { seen.insert(v); });
        return seen.size();
    }
    std::unordered_set<Scalar, ScalarHash> seen;
    seen.reserve(std::min<std::uint64_t>(pairs, 1u << 20));
    for (const auto& x : a)
        for (const auto& y : b) seen.insert(detail::apply_op(x, y, op));
    return seen.size();
}

inline ScalarSet combine(const ScalarSet& a, const ScalarSet& b, SetOpKind op,
                         const CostGuard& guard = {}) {
    detail::check_combine_pre(a, b, op);
    std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    guard.check(pairs, std::string(setop_name(op)) + " set");
    if (auto ints = detail::int_operands(a, b, op)) {
        const auto& [ia, ib] = *ints;
        long lo, hi;
        detail::int_range(ia, ib, op, lo, hi);
        std::vector<Scalar> items;
        if (detail::range_width(lo, hi) <= static_cast<std::uint64_t>(detail::kDenseRange)) {
            detail::DenseBits bits(lo, hi);
            detail::int_pairs(ia, ib, op, [&](long v) { bits.set(v); });
            items.reserve(bits.popcount());
            bits.for_each([&](long v) { items.emplace_back(v); });
        } else {
            std::unordered_set<long> seen;
            seen.reserve(std::min<std::uint64_t>(pairs, 1u << 22));
            detail::int_pairs(ia, ib, op, [&](long v) { seen.insert(v); });
            items.reserve(seen.size());
            for (long v : seen) items.emplace_back(v);
        }
        return ScalarSet(std::move(items));
    }
    std::unordered_set<Scalar, ScalarHash> seen;
    seen.reserve(std::min<std::uint64_t>(pairs, 1u << 20));
    for (const auto& x : a)
        for (const auto& y : b) seen.insert(detail::apply_op(x, y, op));
    std::vector<Scalar> items(seen.begin(), seen.end());
    return ScalarSet(std::move(items));
}

// s -> #{(a,b) in A x B : a op b = s}; total mass |A||B|.
inline CountTable representation_table(const ScalarSet& a, const ScalarSet& b, SetOpKind op,
                                       const CostGuard& guard = {}) {
    detail::check_combine_pre(a, b, op);
    std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    guard.check(pairs, std::string(setop_name(op)) + " representation table");
    CountTable table;
    for (const auto& x : a)
        for (const auto& y : b) table.add(detail::apply_op(x, y, op));
    return table;
}

// #{(a1,b1,a2,b2) : a1+b1 = a2+b2} = sum of squared multiplicities of the sum
// table. Ordered quadruples.
inline std::uint64_t additive_energy(const ScalarSet& a, const ScalarSet& b,
                                     const CostGuard& guard = {}) {
    detail::check_combine_pre(a, b, SetOpKind::sum);
    std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    guard.check(pairs, "additive energy");
    if (auto ints = detail::int_operands(a, b, SetOpKind::sum)) {
        const auto& [ia, ib] = *ints;
        long lo, hi;
        detail::int_range(ia, ib, SetOpKind::sum, lo, hi);
        if (detail::range_width(lo, hi) <= (1ull << 24)) {
            std::vector<std::uint32_t> counts(detail::range_width(lo, hi) + 1, 0);
            for (long x : ia)
                for (long y : ib) ++counts[x + y - lo];
            std::uint64_t e = 0;
            for (std::uint64_t c : counts) e += c * c;
            return e;
        }
    }
    return representation_table(a, b, SetOpKind::sum, guard).second_moment();
}

inline std::uint64_t additive_energy(const ScalarSet& a, const CostGuard& guard = {}) {
    return additive_energy(a, a, guard);
}

struct WeakEsReport {
    std::uint64_t energy;     // E(A)
    std::uint64_t card_aa;    // |AA|
    std::uint64_t card_sum;   // |A+A|
    std::uint64_t card_diff;  // |A-A|
    double ratio;             // E(A)|A| / |AA|^3
    bool cs_sum_holds;        // |A+A| >= |A|^4 / E(A)
    bool cs_diff_holds;       // |A-A| >= |A|^4 / E(A)
};

inline WeakEsReport weak_es_report(const ScalarSet& a, const CostGuard& guard = {}) {
    if (a.contains_zero()) throw std::domain_error("weak-es report requires 0 not in A");
    if (a.size() < 2) throw std::domain_error("weak-es report requires |A| >= 2");
    WeakEsReport r{};
    r.energy = additive_energy(a, guard);
    r.card_aa = combine_cardinality(a, a, SetOpKind::product, guard);
    r.card_sum = combine_cardinality(a, a, SetOpKind::sum, guard);
    r.card_diff = combine_cardinality(a, a, SetOpKind::difference, guard);
    mpz_class n4;
    mpz_ui_pow_ui(n4.get_mpz_t(), static_cast<unsigned long>(a.size()), 4);
    // |A+-A| * E(A) >= |A|^4, exactly
    r.cs_sum_holds = mpz_class(mpz_class(r.card_sum) * mpz_class(r.energy)) >= n4;
    r.cs_diff_holds = mpz_class(mpz_class(r.card_diff) * mpz_class(r.energy)) >= n4;
    double aa = static_cast<double>(r.card_aa);
    r.ratio = static_cast<double>(r.energy) * static_cast<double>(a.size()) / (aa * aa * aa);
    return r;
}

}  // namespace bflab
