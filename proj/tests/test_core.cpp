#include <doctest.h>

#include <sstream>

#include "test_util.hpp"

using namespace bflab;
using testutil::Rng;

TEST_CASE("scalar text grammar round-trips and canonicalizes") {
    CHECK(Scalar::parse("12") == Scalar(12));
    CHECK(Scalar::parse("-3/7") == Scalar(-3, 7));
    CHECK(Scalar::parse("+4/6") == Scalar(2, 3));
    CHECK(Scalar::parse("007") == Scalar(7));
    CHECK(Scalar::parse("-3/7").str() == "-3/7");
    CHECK(Scalar::parse("4/2").str() == "2");
    CHECK(Scalar(0, 5).str() == "0");

    CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("1/-2"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("abc"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("1.5"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse(""), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("3/"), std::domain_error);
}

TEST_CASE("scalar canonical form is unique: equality, ordering, hash agree") {
    Scalar half(1, 2), alt(2, 4), neg(1, -2);
    CHECK(half == alt);
    CHECK(half.hash() == alt.hash());
    CHECK(neg == Scalar(-1, 2));
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);
    CHECK(Scalar(1, 3) < Scalar(1, 2));
    CHECK(Scalar(-5) < Scalar(-1, 3));
    CHECK(Scalar(0) == Scalar(0, 9));
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("scalar arithmetic is exact on 1e5 seeded rationals") {
    Rng rng(101);
    for (int i = 0; i < 100000; ++i) {
        Scalar a = rng.rational(1000, 60);
        Scalar b = rng.nonzero_rational(1000, 60);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("eval_form matches the worked examples") {
    BilinearForm dot = BilinearForm::dot();
    BilinearForm skew = BilinearForm::skew();
    CHECK(eval_form(dot, Point{Scalar(1), Scalar(2)}, Point{Scalar(3), Scalar(4)}) == Scalar(11));
    CHECK(eval_form(skew, Point{Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(1)}) == Scalar(1));
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Point q = rng.nonzero_point(50, 9);
        CHECK(eval_form(skew, q, q).is_zero());
    }
}

TEST_CASE("eval_form is bilinear in each slot") {
    Rng rng(13);
    for (const auto& f : {BilinearForm::dot(), BilinearForm::skew()}) {
        for (int i = 0; i < 200; ++i) {
            Scalar t = rng.rational(40, 7);
            Point p = rng.point(40, 7), q = rng.point(40, 7);
            CHECK(f.eval(t * p, q) == t * f.eval(p, q));
            CHECK(f.eval(p, t * q) == t * f.eval(p, q));
            Point p2 = rng.point(40, 7);
            CHECK(f.eval(p + p2, q) == f.eval(p, q) + f.eval(p2, q));
        }
    }
}

TEST_CASE("bilinear form invariants are enforced") {
    CHECK_THROWS_AS(BilinearForm(Scalar(1), Scalar(2), Scalar(2), Scalar(4), FormKind::symmetric),
                    std::domain_error);  // zero determinant
    CHECK_THROWS_AS(BilinearForm(Scalar(1), Scalar(2), Scalar(3), Scalar(4), FormKind::symmetric),
                    std::domain_error);  // m12 != m21
    CHECK_THROWS_AS(
        BilinearForm(Scalar(1), Scalar(1), Scalar(-1), Scalar(0), FormKind::skew_symmetric),
        std::domain_error);  // nonzero diagonal
    BilinearForm scaled(Scalar(0), Scalar(5, 3), Scalar(-5, 3), Scalar(0),
                        FormKind::skew_symmetric);
    CHECK(scaled.eval(Point{Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(1)}) == Scalar(5, 3));
}

TEST_CASE("direction_of reduces and sign-normalizes") {
    auto dir = [](long x, long y) { return direction_of(Point{Scalar(x), Scalar(y)}); };
    CHECK(dir(2, 4) == Direction(1, 2));
    CHECK(dir(-1, -2) == Direction(1, 2));
    CHECK(dir(0, 5) == Direction(0, 1));
    CHECK(dir(0, -5) == Direction(0, 1));
    CHECK(dir(-3, 0) == Direction(1, 0));
    CHECK_THROWS_AS(direction_of(Point{Scalar(0), Scalar(0)}), std::domain_error);

    // rational points reduce through denominators: (2/3, 4/5) ~ (10, 12) ~ (5, 6)
    CHECK(direction_of(Point{Scalar(2, 3), Scalar(4, 5)}) == Direction(5, 6));
}

TEST_CASE("direction_of is invariant under nonzero rational scaling") {
    Rng rng(29);
    for (int i = 0; i < 500; ++i) {
        Point p = rng.nonzero_point(60, 11);
        Scalar t = rng.nonzero_rational(60, 11);
        CHECK(direction_of(t * p) == direction_of(p));
    }
}

TEST_CASE("sets deduplicate and iterate in canonical ascending order") {
    ScalarSet s(std::vector<Scalar>{Scalar(3), Scalar(1, 2), Scalar(3), Scalar(-1)});
    CHECK(s.size() == 3);
    CHECK(s.items().front() == Scalar(-1));
    CHECK(s.items().back() == Scalar(3));
    CHECK(s.contains(Scalar(1, 2)));
    CHECK_FALSE(s.contains(Scalar(2)));

    PointSet p(std::vector<Point>{Point{Scalar(1), Scalar(1)}, Point{Scalar(0), Scalar(2)},
                                  Point{Scalar(1), Scalar(1)}});
    CHECK(p.size() == 2);
    CHECK(p.items().front() == Point{Scalar(0), Scalar(2)});
}

TEST_CASE("text files: comments, blank lines, and malformed rows") {
    {
        std::istringstream in("# heading\n\n1 2\n-3/7 12\n");
        PointSet p = read_point_set(in);
        REQUIRE(p.size() == 2);
        CHECK(p.contains(Point{Scalar(-3, 7), Scalar(12)}));
    }
    {
        std::istringstream in("1 2 3\n");
        CHECK_THROWS_AS(read_point_set(in), std::domain_error);
    }
    {
        std::istringstream in("1/0 2\n");
        CHECK_THROWS_AS(read_point_set(in), std::domain_error);
    }
    {
        std::istringstream in("# a set\n3 1/2\n-5\n3\n");
        ScalarSet s = read_scalar_set(in);
        CHECK(s.size() == 3);
    }
    {
        std::istringstream in("skew\n0 1 -1 0\n");
        BilinearForm f = read_form(in);
        CHECK(f.kind() == FormKind::skew_symmetric);
        CHECK(f.eval(Point{Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(1)}) == Scalar(1));
    }
    {
        std::istringstream in("symmetric\n1 0 0\n");
        CHECK_THROWS_AS(read_form(in), std::domain_error);
    }
    {
        std::istringstream in("hermitian\n1 0 0 1\n");
        CHECK_THROWS_AS(read_form(in), std::domain_error);
    }
}

TEST_CASE("content hashes are canonical and sensitive") {
    ScalarSet a = ScalarSet::of({3, 1, 2});
    ScalarSet b = ScalarSet::of({1, 2, 3});
    CHECK(content_hash(a) == content_hash(b));  // canonical order, not input order
    CHECK(content_hash(a) != content_hash(ScalarSet::of({1, 2, 4})));
    CHECK(content_hash_hex("").size() == 16);
}

TEST_CASE("count table tracks mass, distinct keys and moments") {
    CountTable t;
    t.add(Scalar(1));
    t.add(Scalar(1));
    t.add(Scalar(2, 3));
    CHECK(t.mass() == 3);
    CHECK(t.distinct() == 2);
    CHECK(t.at(Scalar(1)) == 2);
    CHECK(t.at(Scalar(5)) == 0);
    CHECK(t.second_moment() == 5);
    CHECK(t.max_multiplicity() == 2);
    auto entries = t.sorted_entries();
    CHECK(entries.front().first == Scalar(2, 3));
}
