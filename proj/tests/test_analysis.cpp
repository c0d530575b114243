#include <doctest.h>

#include "test_util.hpp"

using namespace bflab;
using testutil::Rng;

TEST_CASE("exponent fit recovers planted power laws") {
    FitResult two = fit_exponent({{10, 100}, {100, 10000}});
    CHECK(two.slope == doctest::Approx(2.0).epsilon(1e-12));

    FitResult linear = fit_exponent({{4, 12}, {16, 48}, {64, 192}});  // value = 3n
    CHECK(linear.slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(linear.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    FitResult three = fit_exponent({{10, 100}, {100, 10000}, {1000, 1000000}});
    CHECK(three.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(three.rms_residual == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(fit_exponent({{10, 100}}), std::domain_error);
    CHECK_THROWS_AS(fit_exponent({{10, 0}, {100, 10}}), std::domain_error);
    CHECK_THROWS_AS(fit_exponent({{10, 5}, {10, 7}}), std::domain_error);
}

TEST_CASE("bound ratio rows: ST example, equality, flags, errors") {
    double st = 4.0 * (std::pow(81.0, 2.0 / 3.0) + 9.0 + 9.0);
    RatioRow row = bound_ratio_report("st", 8.0, {{1.0, st}}, BoundKind::upper);
    CHECK(*row.ratio == doctest::Approx(0.0545).epsilon(1e-2));
    CHECK_FALSE(row.flagged);

    RatioRow eq = bound_ratio_report("eq", 5.0, {{1.0, 5.0}}, BoundKind::lower);
    CHECK(*eq.ratio == doctest::Approx(1.0));
    CHECK_FALSE(eq.flagged);

    RatioRow zero = bound_ratio_report("zero", 0.0, {{1.0, 3.0}}, BoundKind::lower);
    CHECK(zero.flagged);

    RatioRow terms = bound_ratio_report("sum", 10.0, {{2.0, 3.0}, {1.0, 4.0}}, BoundKind::upper);
    CHECK(terms.bound == doctest::Approx(10.0));

    CHECK_THROWS_AS(bound_ratio_report("bad", 1.0, {{1.0, -2.0}}, BoundKind::lower),
                    std::domain_error);
    CHECK_THROWS_AS(bound_ratio_report("bad", 1.0, {}, BoundKind::lower), std::domain_error);
}

TEST_CASE("w0 = ceil(N^(8/13)) is computed exactly") {
    CHECK(detail::ceil_pow_frac(500, 8, 13) == 46);
    CHECK(detail::ceil_pow_frac(8192, 8, 13) == 256);  // exact power stays exact
    for (std::uint64_t n : {2ull, 17ull, 100ull, 4096ull, 99999ull}) {
        std::uint64_t w = detail::ceil_pow_frac(n, 8, 13);
        mpz_class n8, w13, w13prev;
        mpz_ui_pow_ui(n8.get_mpz_t(), n, 8);
        mpz_ui_pow_ui(w13.get_mpz_t(), w, 13);
        mpz_ui_pow_ui(w13prev.get_mpz_t(), w - 1, 13);
        CHECK(w13 >= n8);
        CHECK(w13prev < n8);
    }
}

TEST_CASE("thm34 suite flags the excluded degenerate case") {
    PointSet ray(std::vector<Point>{Point{Scalar(1), Scalar(1)}, Point{Scalar(2), Scalar(2)},
                                    Point{Scalar(3), Scalar(3)}});
    Report rep = thm34_suite(ray, std::nullopt);
    bool noted = false;
    for (const auto& n : rep.notes)
        if (n.find("single line through the origin") != std::string::npos) noted = true;
    CHECK(noted);
    CHECK(rep.rows.front().measured == 0);
}

TEST_CASE("thm34 suite emits every lemma row on a structured split") {
    // four rich origin lines (5 points each) plus a few poor ones
    std::vector<Point> v;
    for (long k = 1; k <= 5; ++k) {
        v.push_back(Point{Scalar(k), Scalar(0)});
        v.push_back(Point{Scalar(0), Scalar(k)});
        v.push_back(Point{Scalar(k), Scalar(k)});
        v.push_back(Point{Scalar(k), Scalar(2 * k)});
    }
    v.push_back(Point{Scalar(1), Scalar(3)});
    v.push_back(Point{Scalar(3), Scalar(1)});
    PointSet p(std::move(v));
    Report rep = thm34_suite(p, 2);  // w0 override: fibers of > 2 points are rich

    auto find = [&](const std::string& name) -> const RatioRow* {
        for (const auto& r : rep.rows)
            if (r.name == name) return &r;
        return nullptr;
    };
    REQUIRE(find("T_count"));
    REQUIRE(find("bone_T1"));
    REQUIRE(find("btwo_T2"));
    REQUIRE(find("key_teq"));
    CHECK(find("btwo_T2")->note.empty());  // four rich directions: not degenerate
    CHECK(find("btwo_T2")->measured > 0);
    CHECK(find("key_teq")->measured > 0);
    CHECK(find("single_value_max")->ratio.has_value());

    // deterministic: a second run reproduces the rows exactly
    Report again = thm34_suite(p, 2);
    REQUIRE(again.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(again.rows[i].name == rep.rows[i].name);
        CHECK(again.rows[i].measured == rep.rows[i].measured);
        CHECK(again.rows[i].bound == rep.rows[i].bound);
    }
}

TEST_CASE("eps1 suite reproduces the geometric |A| = 16 measurement") {
    auto a = make_progression(ProgressionKind::geometric, Scalar(1), Scalar(2), 16);
    Report rep = eps1_suite(a);
    REQUIRE(rep.rows.size() == 3);
    // AA is the 31-term progression {2^0..2^30}; |AA+AA| enumerates to 496
    CHECK(rep.rows[1].name == "aa_plus_aa_vs_a_19_12");
    CHECK(rep.rows[1].measured == 496);
    CHECK(*rep.rows[1].ratio > 1.0);
    CHECK_FALSE(rep.rows[1].flagged);

    bool found = false;
    for (const auto& n : rep.notes)
        if (n == "|AA|=31") found = true;
    CHECK(found);
}

TEST_CASE("eps2 suite emits both rows on a small set") {
    auto a = make_progression(ProgressionKind::arithmetic, Scalar(1), Scalar(1), 16);
    Report rep = eps2_suite(a);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].name == "aa_minus_aa_vs_a_26_17");
    CHECK(rep.rows[0].measured >= rep.rows[0].bound);  // desk scale satisfies the bound
    CHECK(rep.rows[1].name == "liorn");
    CHECK(rep.rows[1].ratio.has_value());
}

TEST_CASE("construction suite: bounds hold and the two-point fit appears") {
    Report rep = construction_suite({64, 4096});
    CHECK(rep.rows.size() == 6);
    for (const auto& r : rep.rows) {
        INFO(r.name);
        CHECK_FALSE(r.flagged);
        CHECK(*r.ratio >= 1.0);
    }
    REQUIRE(rep.fit.has_value());
    CHECK(rep.fit->slope > 1.0);
    CHECK(rep.fit->slope < 2.0);

    Report one = construction_suite({64});
    CHECK_FALSE(one.fit.has_value());
    CHECK_THROWS_AS(construction_suite({65}), std::domain_error);
}

TEST_CASE("weak-es suite rows mirror the report") {
    Report rep = weak_es_suite(ScalarSet::of({1, 2, 4, 8}));
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.rows[0].measured == 28);     // E(A)
    CHECK(rep.rows[2].measured == 10);     // |A+A|
    CHECK_FALSE(rep.rows[2].flagged);      // 10 >= 4^4/28
    CHECK(rep.notes.empty());
}

TEST_CASE("e-upper suite stays under N^3 on a random set") {
    Rng rng(60);
    PointSet p = testutil::random_point_set(rng, 40, 30);
    Report rep = e_upper_suite(p, BilinearForm::skew());
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[1].name == "energy_vs_n3");
    CHECK(*rep.rows[1].ratio < 1.0);
    CHECK_FALSE(rep.rows[1].flagged);
}

TEST_CASE("suite dispatch validates names and inputs") {
    SuiteInput in;
    CHECK_THROWS_AS(run_suite("nope", in), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("eps1", in), std::domain_error);  // missing scalars
    in.scalars = ScalarSet::of({1, 2, 3, 4});
    CHECK(run_suite("eps1", in).suite == "eps1");
    CHECK(run_suite("weak-es", in).suite == "weak-es");
    in.ns = {64};
    CHECK(run_suite("construction", in).suite == "construction");
    in.points = PointSet(std::vector<Point>{Point{Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(1)}});
    CHECK(run_suite("thm34", in).suite == "thm34");
    CHECK(run_suite("e-upper", in).suite == "e-upper");
}

TEST_CASE("reports embed content hashes of their inputs") {
    auto a = ScalarSet::of({1, 2, 3, 4});
    Report rep = eps1_suite(a);
    REQUIRE(rep.inputs.size() == 1);
    CHECK(rep.inputs[0].first == "a");
    CHECK(rep.inputs[0].second == content_hash(a));
    CHECK(rep.inputs[0].second.size() == 16);
    // the hash tracks content, not identity
    CHECK(content_hash(ScalarSet::of({1, 2, 3, 4})) == rep.inputs[0].second);
    CHECK(content_hash(ScalarSet::of({1, 2, 3, 5})) != rep.inputs[0].second);
}
