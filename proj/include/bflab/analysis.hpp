#pragma once

// Measurement harness: log-log exponent fits, bound-ratio rows, and the
// per-theorem suites. This module is the only place floating point is
// allowed (64-bit IEEE doubles); every count entering a fit or ratio is an
// exact integer produced elsewhere.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bflab/equations.hpp"
#include "bflab/formstats.hpp"
#include "bflab/generators.hpp"
#include "bflab/guard.hpp"
#include "bflab/setops.hpp"
#include "bflab/textio.hpp"

namespace bflab {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double rms_residual = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> points;  // (size, value)
};

// Least squares on (ln size, ln value).
inline FitResult fit_exponent(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& records) {
    if (records.size() < 2) throw std::domain_error("exponent fit needs at least two points");
    for (const auto& [n, v] : records)
        if (n < 1 || v < 1) throw std::domain_error("exponent fit needs positive sizes and values");
    double sx = 0, sy = 0;
    for (const auto& [n, v] : records) {
        sx += std::log(static_cast<double>(n));
        sy += std::log(static_cast<double>(v));
    }
    double mx = sx / records.size(), my = sy / records.size();
    double sxx = 0, sxy = 0;
    for (const auto& [n, v] : records) {
        double dx = std::log(static_cast<double>(n)) - mx;
        double dy = std::log(static_cast<double>(v)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx == 0) throw std::domain_error("exponent fit needs at least two distinct sizes");
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double se = 0;
    for (const auto& [n, v] : records) {
        double r = std::log(static_cast<double>(v)) -
                   (fit.intercept + fit.slope * std::log(static_cast<double>(n)));
        se += r * r;
    }
    fit.rms_residual = std::sqrt(se / records.size());
    fit.points = records;
    return fit;
}

enum class BoundKind { lower, upper };

struct RatioRow {
    std::string name;
    double measured = 0;
    double bound = 0;
    std::optional<double> ratio;
    bool flagged = false;  // a lower bound fell short or an upper bound was exceeded
    std::string note;
};

struct BoundTerm {
    double coefficient;
    double value;
};

inline RatioRow bound_ratio_report(const std::string& name, double measured,
                                   const std::vector<BoundTerm>& terms, BoundKind kind) {
    double bound = 0;
    for (const auto& t : terms) bound += t.coefficient * t.value;
    if (!(bound > 0)) throw std::domain_error("bound ratio report: nonpositive bound");
    RatioRow row{name, measured, bound, measured / bound, false, ""};
    row.flagged = kind == BoundKind::lower ? measured < bound : measured > bound;
    return row;
}

namespace detail {

// Row builder that tolerates degenerate (nonpositive) bounds, for suites that
// must still emit the row.
inline RatioRow make_row(const std::string& name, double measured, double bound,
                         BoundKind kind, std::string note = "") {
    if (bound > 0) {
        RatioRow row = bound_ratio_report(name, measured, {{1.0, bound}}, kind);
        row.note = std::move(note);
        return row;
    }
    return RatioRow{name, measured, bound, std::nullopt, false,
                    note.empty() ? "degenerate: nonpositive bound" : note};
}

inline RatioRow info_row(const std::string& name, double measured, std::string note = "") {
    return RatioRow{name, measured, 0, std::nullopt, false, std::move(note)};
}

// Smallest w with w^k >= x.
inline std::uint64_t ceil_kth_root(const mpz_class& x, unsigned long k) {
    mpz_class r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    mpz_class rk;
    mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
    if (rk < x) ++r;
    return static_cast<std::uint64_t>(r.get_ui());
}

// ceil(n^(num/den)) computed exactly in integers.
inline std::uint64_t ceil_pow_frac(std::uint64_t n, unsigned long num, unsigned long den) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, num);
    return ceil_kth_root(p, den);
}

}  // namespace detail

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> inputs;  // label -> hash or value
    std::vector<RatioRow> rows;
    std::optional<FitResult> fit;
    std::vector<std::string> notes;
};

// Theorem 34 instrumentation: split P at w0 (default ceil(N^(8/13))), measure
// the skew value sets of both halves and the six-variable equation count on
// the rich side, against the proof's per-lemma bounds with constant 1.
inline Report thm34_suite(const PointSet& p, std::optional<std::uint64_t> w0_override,
                          const CostGuard& guard = {}) {
    Report rep;
    rep.suite = "thm34";
    rep.inputs.emplace_back("points", content_hash(p));
    std::uint64_t n = p.size();
    if (n == 0) throw std::domain_error("thm34 suite needs a nonempty point set");
    std::uint64_t w0 = w0_override ? *w0_override : detail::ceil_pow_frac(n, 8, 13);
    rep.notes.push_back("N=" + std::to_string(n));
    rep.notes.push_back("w0=" + std::to_string(w0));

    BilinearForm skew = BilinearForm::skew();
    CountTable table = form_value_table(p, skew, guard);
    std::uint64_t t_count = table.distinct();
    if (t_count == 0)
        rep.notes.push_back(
            "value set empty: P is supported on a single line through the origin "
            "(the excluded degenerate case)");
    rep.rows.push_back(detail::make_row("T_count", static_cast<double>(t_count),
                                        std::pow(static_cast<double>(n), 9.0 / 13.0),
                                        BoundKind::lower));
    rep.rows.push_back(detail::info_row("conj_T_log_over_N",
                                        t_count * std::log(static_cast<double>(n)) / n,
                                        "reported, not asserted"));
    rep.rows.push_back(detail::info_row("conj_T_over_N", static_cast<double>(t_count) / n,
                                        "reported, not asserted"));
    double n_d = static_cast<double>(n);
    rep.rows.push_back(detail::make_row("single_value_max",
                                        static_cast<double>(table.max_multiplicity()),
                                        4.0 * (std::pow(n_d, 4.0 / 3.0) + n_d),
                                        BoundKind::upper));

    RichPoorSplit split = split_by_line_richness(p, w0);
    std::uint64_t n1 = split.poor.size(), n2 = split.rich.size();
    rep.notes.push_back("N1=" + std::to_string(n1));
    rep.notes.push_back("N2=" + std::to_string(n2));

    std::size_t dirs1 = n1 ? direction_fibers(split.poor).size() : 0;
    if (n1 > 0 && dirs1 >= 2) {
        std::uint64_t t1 = value_set(split.poor, skew, guard).size();
        rep.rows.push_back(detail::make_row("bone_T1", static_cast<double>(t1),
                                            n1 / std::sqrt(static_cast<double>(w0)),
                                            BoundKind::lower));
    } else {
        rep.rows.push_back(detail::make_row("bone_T1", 0, 0, BoundKind::lower,
                                            "excluded: P1 lies on a single origin line"));
    }

    std::size_t dirs2 = n2 ? direction_fibers(split.rich).size() : 0;
    ScalarSet t2;
    if (n2 > 0) t2 = value_set(split.rich, skew, guard);
    rep.rows.push_back(detail::make_row(
        "btwo_T2", static_cast<double>(t2.size()),
        std::pow(static_cast<double>(n2), 3.0 / 7.0) * std::pow(static_cast<double>(w0), 3.0 / 7.0),
        BoundKind::lower,
        dirs2 >= 4 ? "" : "degenerate: P2 spans fewer than four origin lines"));
    std::uint64_t teq = t2.empty() ? 0 : count_teq(t2, guard);
    rep.rows.push_back(detail::make_row(
        "key_teq", static_cast<double>(teq),
        static_cast<double>(n2) * n2 * w0 * w0, BoundKind::lower,
        t2.empty() ? "degenerate: T2 empty" : ""));
    return rep;
}

inline Report eps1_suite(const ScalarSet& a, const CostGuard& guard = {}) {
    if (a.size() < 2) throw std::domain_error("eps1 suite needs |A| >= 2");
    if (a.contains_zero()) throw std::domain_error("eps1 suite needs 0 not in A");
    Report rep;
    rep.suite = "eps1";
    rep.inputs.emplace_back("a", content_hash(a));
    double n = static_cast<double>(a.size());
    ScalarSet aa = combine(a, a, SetOpKind::product, guard);
    std::uint64_t plus = combine_cardinality(aa, aa, SetOpKind::sum, guard);
    std::uint64_t ratio_count = combine_cardinality(a, a, SetOpKind::ratio, guard);
    rep.notes.push_back("|AA|=" + std::to_string(aa.size()));
    rep.notes.push_back("|A:A|=" + std::to_string(ratio_count));
    double r = static_cast<double>(ratio_count);
    rep.rows.push_back(detail::make_row("aa_plus_aa_vs_a54_ratio13", static_cast<double>(plus),
                                        std::pow(n, 5.0 / 4.0) * std::cbrt(r),
                                        BoundKind::lower));
    rep.rows.push_back(detail::make_row("aa_plus_aa_vs_a_19_12", static_cast<double>(plus),
                                        std::pow(n, 19.0 / 12.0), BoundKind::lower));
    rep.rows.push_back(detail::make_row("aa_plus_aa_vs_basic_st", static_cast<double>(plus),
                                        n * std::sqrt(r), BoundKind::lower));
    return rep;
}

inline Report eps2_suite(const ScalarSet& a, const CostGuard& guard = {}) {
    if (a.size() < 2) throw std::domain_error("eps2 suite needs |A| >= 2");
    if (a.contains_zero()) throw std::domain_error("eps2 suite needs 0 not in A");
    Report rep;
    rep.suite = "eps2";
    rep.inputs.emplace_back("a", content_hash(a));
    double n = static_cast<double>(a.size());
    double logn = std::log(n);  // natural log; the base shifts constants only
    ScalarSet aa = combine(a, a, SetOpKind::product, guard);
    std::uint64_t minus = combine_cardinality(aa, aa, SetOpKind::difference, guard);
    std::uint64_t diff_count = combine_cardinality(a, a, SetOpKind::difference, guard);
    std::uint64_t ratio_count = combine_cardinality(a, a, SetOpKind::ratio, guard);
    rep.notes.push_back("|A-A|=" + std::to_string(diff_count));
    rep.notes.push_back("|A:A|=" + std::to_string(ratio_count));
    rep.rows.push_back(detail::make_row(
        "aa_minus_aa_vs_a_26_17", static_cast<double>(minus),
        std::pow(n, 26.0 / 17.0) / std::pow(logn, 2.0 / 17.0), BoundKind::lower));
    rep.rows.push_back(detail::make_row(
        "liorn", std::pow(static_cast<double>(ratio_count), 6.0) *
                     std::pow(static_cast<double>(diff_count), 5.0),
        std::pow(n, 14.0) / (logn * logn), BoundKind::lower));
    return rep;
}

inline Report construction_suite(const std::vector<long>& ns) {
    if (ns.empty()) throw std::domain_error("construction suite needs at least one N");
    Report rep;
    rep.suite = "construction";
    std::string joined;
    for (long n : ns) joined += (joined.empty() ? "" : ",") + std::to_string(n);
    rep.inputs.emplace_back("n", joined);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> growth;
    for (long n : ns) {
        ConstructionBundle bundle = erdos_construction(n);
        std::string tag = "N=" + std::to_string(n) + ":";
        double n13 = static_cast<double>(bundle.sixth_root) * bundle.sixth_root;
        std::uint64_t s = bundle_dot_solution_count(bundle);
        rep.rows.push_back(detail::make_row(tag + "pencil_min_support",
                                            static_cast<double>(bundle_min_pencil_support(bundle)),
                                            2.0 * n13, BoundKind::lower));
        rep.rows.push_back(detail::make_row(tag + "dot_solutions", static_cast<double>(s),
                                            std::pow(static_cast<double>(n), 4.0 / 3.0),
                                            BoundKind::lower));
        rep.rows.push_back(detail::make_row(tag + "pinned_cross",
                                            static_cast<double>(bundle_pinned_cross_count(bundle)),
                                            std::pow(static_cast<double>(n), 7.0 / 3.0),
                                            BoundKind::lower));
        rep.notes.push_back(tag + "p1=" + std::to_string(bundle.p1.size()) +
                            " p2=" + std::to_string(bundle.p2.size()) +
                            " pencil=" + std::to_string(bundle.pencil.size()));
        growth.emplace_back(static_cast<std::uint64_t>(n), s);
    }
    if (growth.size() >= 2) rep.fit = fit_exponent(growth);
    return rep;
}

inline Report weak_es_suite(const ScalarSet& a, const CostGuard& guard = {}) {
    Report rep;
    rep.suite = "weak-es";
    rep.inputs.emplace_back("a", content_hash(a));
    WeakEsReport r = weak_es_report(a, guard);
    double n = static_cast<double>(a.size());
    double e = static_cast<double>(r.energy);
    rep.rows.push_back(detail::info_row("energy", e));
    rep.rows.push_back(detail::info_row("card_aa", static_cast<double>(r.card_aa)));
    rep.rows.push_back(detail::make_row("cs_sum", static_cast<double>(r.card_sum),
                                        n * n * n * n / e, BoundKind::lower));
    rep.rows.push_back(detail::make_row("cs_diff", static_cast<double>(r.card_diff),
                                        n * n * n * n / e, BoundKind::lower));
    rep.rows.push_back(detail::info_row("es_chain_ratio", r.ratio,
                                        "E(A)|A|/|AA|^3; constant unknown, reported only"));
    if (!r.cs_sum_holds || !r.cs_diff_holds)
        rep.notes.push_back("Cauchy-Schwarz violation (impossible): check arithmetic");
    return rep;
}

inline Report e_upper_suite(const PointSet& p, const BilinearForm& form,
                            const CostGuard& guard = {}) {
    Report rep;
    rep.suite = "e-upper";
    rep.inputs.emplace_back("points", content_hash(p));
    std::uint64_t n = p.size();
    if (n == 0) throw std::domain_error("e-upper suite needs a nonempty point set");
    std::uint64_t e = form_energy(p, form, guard);
    double n_d = static_cast<double>(n);
    rep.rows.push_back(detail::info_row("energy", static_cast<double>(e)));
    rep.rows.push_back(detail::make_row("energy_vs_n3", static_cast<double>(e),
                                        n_d * n_d * n_d, BoundKind::upper));
    rep.rows.push_back(detail::make_row("energy_vs_n10_3", static_cast<double>(e),
                                        std::pow(n_d, 10.0 / 3.0), BoundKind::upper));
    return rep;
}

struct SuiteInput {
    std::optional<PointSet> points;
    std::optional<ScalarSet> scalars;
    std::vector<long> ns;
    std::optional<BilinearForm> form;
    std::optional<std::uint64_t> w0;
};

inline Report run_suite(const std::string& name, const SuiteInput& in,
                        const CostGuard& guard = {}) {
    auto need_points = [&]() -> const PointSet& {
        if (!in.points) throw std::domain_error("suite '" + name + "' needs a point set");
        return *in.points;
    };
    auto need_scalars = [&]() -> const ScalarSet& {
        if (!in.scalars) throw std::domain_error("suite '" + name + "' needs a scalar set");
        return *in.scalars;
    };
    if (name == "thm34") return thm34_suite(need_points(), in.w0, guard);
    if (name == "eps1") return eps1_suite(need_scalars(), guard);
    if (name == "eps2") return eps2_suite(need_scalars(), guard);
    if (name == "construction") return construction_suite(in.ns);
    if (name == "weak-es") return weak_es_suite(need_scalars(), guard);
    if (name == "e-upper")
        return e_upper_suite(need_points(), in.form ? *in.form : BilinearForm::skew(), guard);
    throw std::invalid_argument("unknown suite name '" + name + "'");
}

}  // namespace bflab
