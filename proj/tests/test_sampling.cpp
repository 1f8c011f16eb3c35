#include "doctest.h"

#include "tropcomm/errors.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/sampling.hpp"

using namespace tropcomm;

TEST_CASE("splitmix64 reference values") {
    // Published test vector for the standard constants.
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xe220a8397b1dcdafull);

    SplitMix64 a(12345);
    CHECK(a.next() == 0x22118258a9d111a0ull);
    CHECK(a.next() == 0x346edce5f713f8edull);

    SplitMix64 b(12345), c(12345);
    for (int i = 0; i < 100; ++i) CHECK(b.next() == c.next());
    CHECK(SplitMix64(1).next() != SplitMix64(2).next());

    SplitMix64 d(9);
    for (int i = 0; i < 100; ++i) CHECK(d.below(7) < 7);
    CHECK(SplitMix64(9).below(0) == 0);
}

TEST_CASE("uniform_rational stays on the grid inside the interval") {
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Rational r = uniform_rational(rng, Rational(-3), Rational(-1), 4);
        CHECK(r >= -3);
        CHECK(r <= -1);
        CHECK(denominator(Rational(r * 4)) == 1); // multiple of 1/4
    }
    CHECK(uniform_rational(rng, Rational(2), Rational(2)) == Rational(2));
    CHECK_THROWS_AS(uniform_rational(rng, Rational(1), Rational(0)), DomainError);

    SplitMix64 x(77), y(77);
    for (int i = 0; i < 50; ++i)
        CHECK(uniform_rational(x, -5, 0) == uniform_rational(y, -5, 0));
}

TEST_CASE("interval sampling covers the bottom cases") {
    SplitMix64 rng(6);
    CHECK(sample_in_interval(rng, ExtReal::bottom(), ExtReal::bottom()).is_bottom());
    CHECK_THROWS_AS(sample_in_interval(rng, ExtReal(0), ExtReal::bottom()), DomainError);

    bool hit_bottom = false, hit_real = false;
    for (int i = 0; i < 100; ++i) {
        const ExtReal v = sample_in_interval(rng, ExtReal::bottom(), ExtReal(-1));
        CHECK(v <= ExtReal(-1));
        (v.is_bottom() ? hit_bottom : hit_real) = true;
    }
    CHECK(hit_bottom);
    CHECK(hit_real);

    for (int i = 0; i < 50; ++i) {
        const ExtReal v = sample_in_interval(rng, ExtReal(-2), ExtReal(-1));
        CHECK(ExtReal(-2) <= v);
        CHECK(v <= ExtReal(-1));
    }
}

TEST_CASE("box sampling respects the corners") {
    const TropMatrix lo = identity(3), hi = const_matrix(ExtReal(-1), 3);
    SplitMix64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const TropMatrix m = sample_matrix_in_box(rng, lo, hi);
        CHECK(mat_le(lo, m));
        CHECK(mat_le(m, hi));
    }
    CHECK_THROWS_AS(sample_matrix_in_box(rng, hi, lo), DomainError);
    CHECK_THROWS_AS(sample_matrix_in_box(rng, lo, const_matrix(ExtReal(-1), 2)),
                    DimensionMismatch);
}

TEST_CASE("random matrix generators produce the advertised shapes") {
    SplitMix64 rng(10);
    bool saw_bottom = false;
    for (int i = 0; i < 60; ++i) {
        const TropMatrix m = random_normal_matrix(rng, 4);
        CHECK(is_normal(m));
        if (!is_real(m)) saw_bottom = true;

        const TropMatrix r = random_real_normal_matrix(rng, 4);
        CHECK(is_normal(r));
        CHECK(is_real(r));
    }
    CHECK(saw_bottom);
}
