#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <yanglab/scalar.hpp>

using namespace yanglab;

namespace {

// deterministic LCG for the property samples
struct Rng {
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rational() {
        long d = next(1, 7);
        return Rational(next(-9, 9), d);
    }
    QuadScalar scalar(const FieldContext& ctx) {
        return QuadScalar(rational(), rational(), ctx);
    }
};

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("-7/4").str() == "-7/4");
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/ 2"), validation_error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), validation_error);
    CHECK_THROWS_AS(Rational::parse(""), validation_error);
}

TEST_CASE("quadratic multiplication") {
    FieldContext q2{Rational(2)};
    QuadScalar one_plus(Rational(1), Rational(1), q2);
    QuadScalar one_minus(Rational(1), Rational(-1), q2);
    CHECK(one_plus * one_minus == QuadScalar(Rational(-1), Rational(0), q2));

    QuadScalar root2 = QuadScalar::sqrt_radicand(q2);
    CHECK(root2 * root2 == QuadScalar(Rational(2), Rational(0), q2));

    FieldContext q3{Rational(3)};
    QuadScalar x(Rational(1, 2), Rational(1), q3);
    CHECK(x * QuadScalar(2) == QuadScalar(Rational(1), Rational(2), q3));
}

TEST_CASE("quadratic inverse") {
    FieldContext q2{Rational(2)};
    QuadScalar root2 = QuadScalar::sqrt_radicand(q2);
    CHECK(root2.inverse() == QuadScalar(Rational(0), Rational(1, 2), q2));
    CHECK(QuadScalar(3).inverse() == QuadScalar(Rational(1, 3)));

    QuadScalar x(Rational(1), Rational(1), q2);
    QuadScalar inv = x.inverse();
    CHECK(x * inv == QuadScalar(1));
    CHECK(inv == QuadScalar(Rational(-1), Rational(1), q2));

    CHECK_THROWS_AS(QuadScalar(0).inverse(), validation_error);
}

TEST_CASE("mismatched extensions are rejected") {
    FieldContext q2{Rational(2)}, q3{Rational(3)};
    QuadScalar a = QuadScalar::sqrt_radicand(q2);
    QuadScalar b = QuadScalar::sqrt_radicand(q3);
    CHECK_THROWS_AS(a * b, validation_error);
    CHECK_THROWS_AS(a + b, validation_error);
}

TEST_CASE("rational square root") {
    CHECK(rational_square_root(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rational_square_root(Rational(2)).has_value());
    CHECK(rational_square_root(Rational(0)) == Rational(0));
    CHECK(!rational_square_root(Rational(-4)).has_value());
}

TEST_CASE("sqrt inside the field") {
    FieldContext q5{Rational(5)};
    auto root = sqrt_in_field(QuadScalar(Rational(5), Rational(0), q5));
    REQUIRE(root.has_value());
    CHECK(*root == QuadScalar::sqrt_radicand(q5));

    FieldContext q3{Rational(3)};
    auto y = sqrt_in_field(QuadScalar(Rational(7), Rational(4), q3));
    REQUIRE(y.has_value());
    CHECK(*y == QuadScalar(Rational(2), Rational(1), q3));
    CHECK(*y * *y == QuadScalar(Rational(7), Rational(4), q3));

    CHECK(!sqrt_in_field(QuadScalar(Rational(2), Rational(0), q3)).has_value());
}

TEST_CASE("sqrt_in_field returns exact roots whenever present") {
    Rng rng;
    FieldContext q7{Rational(7)};
    for (int trial = 0; trial < 200; ++trial) {
        QuadScalar y = rng.scalar(q7);
        QuadScalar x = y * y;
        auto root = sqrt_in_field(x);
        REQUIRE(root.has_value());
        CHECK(*root * *root == x);
    }
}

TEST_CASE("field axioms on random samples") {
    Rng rng;
    for (const Rational& d : {Rational(2), Rational(-3), Rational(9, 4)}) {
        FieldContext ctx{d};
        for (int trial = 0; trial < 100; ++trial) {
            QuadScalar a = rng.scalar(ctx), b = rng.scalar(ctx), c = rng.scalar(ctx);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) CHECK(a * a.inverse() == QuadScalar(1));
        }
    }
}

TEST_CASE("degenerate context collapses to rational arithmetic") {
    FieldContext ctx{Rational(9, 4)};  // sqrt(9/4) = 3/2
    REQUIRE(ctx.degenerate());
    CHECK(ctx.sqrt_value() == Rational(3, 2));

    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Rational p1 = rng.rational(), q1 = rng.rational();
        Rational p2 = rng.rational(), q2 = rng.rational();
        QuadScalar a(p1, q1, ctx), b(p2, q2, ctx);
        Rational ra = p1 + q1 * Rational(3, 2), rb = p2 + q2 * Rational(3, 2);
        CHECK(a.quad().is_zero());
        CHECK((a * b).rat() == ra * rb);
        CHECK((a + b).rat() == ra + rb);
        if (!a.is_zero()) CHECK(a.inverse().rat() == Rational(1) / ra);
    }
}

TEST_CASE("scalar grammar round-trip") {
    FieldContext q2{Rational(2)};
    for (const char* text : {"0", "-7/4", "1/2+3*sqrt(2)", "2-1/3*sqrt(2)", "0+1*sqrt(2)"}) {
        QuadScalar s = QuadScalar::parse(text, q2);
        CHECK(s.str() == text);
        CHECK(QuadScalar::parse(s.str(), q2) == s);
    }

    // degenerate radicand folds into the rational part
    CHECK(QuadScalar::parse("1+1*sqrt(9)") == QuadScalar(4));
    CHECK(QuadScalar::parse("0+1/2*sqrt(9/4)") == QuadScalar(Rational(3, 4)));

    CHECK_THROWS_AS(QuadScalar::parse("1 + 2"), validation_error);
    CHECK_THROWS_AS(QuadScalar::parse("1+2*sqrt(2)+3*sqrt(2)", q2), validation_error);
    CHECK_THROWS_AS(QuadScalar::parse("0+1*sqrt(3)", q2), validation_error);
}

TEST_CASE("negative radicands behave as imaginary quadratic fields") {
    FieldContext qm1{Rational(-1)};
    REQUIRE(!qm1.degenerate());
    QuadScalar i = QuadScalar::sqrt_radicand(qm1);
    CHECK(i * i == QuadScalar(Rational(-1), Rational(0), qm1));
    auto root = sqrt_in_field(QuadScalar(Rational(-4), Rational(0), qm1));
    REQUIRE(root.has_value());
    CHECK(*root * *root == QuadScalar(Rational(-4), Rational(0), qm1));
}
