#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/ext_real.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/matrix_io.hpp"

using namespace tropcomm;

TEST_CASE("ext_real ordering and arithmetic") {
    const ExtReal bot = ExtReal::bottom();
    const ExtReal a(-2), b(Rational(-5, 2));

    CHECK(bot < a);
    CHECK(b < a);
    CHECK(t_add(a, b) == a);
    CHECK(t_add(bot, b) == b);
    CHECK(t_mul(a, b) == ExtReal(Rational(-9, 2)));
    CHECK(t_mul(bot, a).is_bottom());
    CHECK(t_neg(a) == ExtReal(2));
    CHECK(t_min(a, bot).is_bottom());
    CHECK_THROWS_AS((void)t_neg(bot), DomainError);
}

TEST_CASE("ext_real parsing round trip") {
    for (const char* tok : {"0", "-5", "-5/2", "7/3", "-inf"}) {
        const ExtReal v = parse_ext_real(tok);
        CHECK(to_string(v) == tok);
    }
    CHECK(parse_ext_real("-0") == ExtReal(0));
    CHECK(parse_ext_real("4/2") == ExtReal(2)); // canonicalized
    CHECK_THROWS_AS(parse_ext_real("abc"), ParseError);
    CHECK_THROWS_AS(parse_ext_real("1/0"), ParseError);
    CHECK_THROWS_AS(parse_ext_real(""), ParseError);
    CHECK_THROWS_AS(parse_rational("-inf"), ParseError);
}

TEST_CASE("matrix constructors") {
    CHECK(identity(3).at(0, 0) == ExtReal(0));
    CHECK(identity(3).at(0, 1).is_bottom());
    CHECK(zero_matrix(2) == TropMatrix{{0, 0}, {0, 0}});
    CHECK(const_matrix(ExtReal(-2), 2) == TropMatrix{{0, -2}, {-2, 0}});
    CHECK(const_matrix(ExtReal::bottom(), 2) == identity(2));
    CHECK_THROWS_AS(const_matrix(ExtReal(1), 2), DomainError);

    const TropMatrix e = unit_perturbation(3, 0, 1, ExtReal(-4));
    CHECK(e.at(0, 1) == ExtReal(-4));
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && e.at(i, j) != ExtReal(0)) ++nonzero;
    CHECK(nonzero == 1);
    CHECK_THROWS_AS(unit_perturbation(3, 1, 1, ExtReal(-1)), DomainError);
    CHECK_THROWS_AS(unit_perturbation(3, 0, 3, ExtReal(-1)), DomainError);

    const TropMatrix d = diag({ExtReal(1), ExtReal(-2)});
    CHECK(d.at(0, 0) == ExtReal(1));
    CHECK(d.at(1, 0).is_bottom());
}

TEST_CASE("matrix classification") {
    CHECK(is_normal(fx::b3()));
    CHECK(is_real(fx::b3()));
    CHECK(!is_strictly_normal(fx::b3())); // has a zero off the diagonal
    CHECK(is_border(fx::b3()));
    CHECK(is_strictly_normal(fx::a4()));
    CHECK(!is_border(fx::a4()));
    CHECK(is_normal(identity(3)));
    CHECK(!is_real(identity(3)));
    CHECK(is_border(identity(3)));
    CHECK(!is_normal(TropMatrix{{0, 1}, {0, 0}}));
    CHECK(!is_normal(TropMatrix{{-1, 0}, {0, 0}}));
    CHECK(!is_normal(TropMatrix(2, 3, ExtReal(0))));
}

TEST_CASE("tropical product and entrywise operations") {
    // (AB)_ij = max_k a_ik + b_kj, hand-checked on a 2x2.
    const TropMatrix a{{0, -2}, {-1, 0}}, b{{0, -3}, {-4, 0}};
    CHECK(mat_mul(a, b) == TropMatrix{{0, -2}, {-1, 0}});
    CHECK(mat_add(a, b) == TropMatrix{{0, -2}, {-1, 0}});
    CHECK(mat_min(a, b) == TropMatrix{{0, -3}, {-4, 0}});
    CHECK(mat_le(mat_min(a, b), a));
    CHECK(transpose(a) == TropMatrix{{0, -1}, {-2, 0}});
    CHECK(scalar_mul(ExtReal(2), a) == TropMatrix{{2, 0}, {1, 2}});
    CHECK_THROWS_AS(mat_mul(a, TropMatrix(3, 3, ExtReal(0))), DimensionMismatch);
    CHECK_THROWS_AS(mat_add(a, TropMatrix(2, 3, ExtReal(0))), DimensionMismatch);

    const TropMatrix i = identity(2);
    CHECK(mat_mul(i, a) == a);
    CHECK(mat_mul(a, i) == a);
}

TEST_CASE("powers and the Kleene star") {
    CHECK(mat_pow(fx::b3(), 0) == identity(3));
    CHECK(mat_pow(fx::b3(), 1) == fx::b3());
    CHECK(mat_pow(fx::a4(), 3) == mat_mul(fx::a4(), mat_mul(fx::a4(), fx::a4())));
    CHECK_THROWS_AS(mat_pow(fx::b3(), -1), DomainError);

    // Star stabilizes at the (n-1)-st power of a normal matrix.
    const TropMatrix s = kleene_star(fx::a4());
    CHECK(s == mat_pow(fx::a4(), 3));
    CHECK(s == mat_pow(fx::a4(), 4));
    CHECK(mat_mul(s, s) == s);

    // For the 3x3 running example the star is the upper bound matrix.
    CHECK(kleene_star(fx::b3()) == fx::b3_over());

    // Powers of a normal matrix grow pointwise toward the star.
    for (int k = 0; k + 1 <= 3; ++k)
        CHECK(mat_le(mat_pow(fx::a4(), k), mat_pow(fx::a4(), k + 1)));
    CHECK(mat_le(kleene_star(fx::a4()), zero_matrix(4)));
}

TEST_CASE("a0 normalization subtracts the last row") {
    CHECK(normalize_a0(fx::b3()) == TropMatrix{{5, -3, -1}, {1, 0, -6}, {0, 0, 0}});
    CHECK(normalize_a0(fx::p_eps0()) == TropMatrix{{0, 3, -5}, {-4, 3, 0}, {0, 0, 0}});
    CHECK(normalize_a0(fx::p_prod()) == TropMatrix{{1, 2, -3}, {-2, 3, -1}, {0, 0, 0}});
    CHECK_THROWS_AS(normalize_a0(identity(3)), NotReal);
}

TEST_CASE("offdiagonal extremes") {
    CHECK(min_offdiag(fx::b3()) == Rational(-6));
    CHECK(max_offdiag(fx::b3()) == Rational(0));
    CHECK(min_offdiag(fx::a4()) == Rational(-6));
    CHECK(max_offdiag(fx::a4()) == Rational(-3));
    CHECK_THROWS_AS(min_offdiag(identity(2)), NotReal);
}

TEST_CASE("matrix text round trip") {
    for (const TropMatrix& m : {fx::b3(), fx::a4(), fx::h7(), identity(3)}) {
        CHECK(parse_matrix(format_matrix(m)) == m);
    }

    const TropMatrix q = parse_matrix("2 2\n0 -1/2\n-inf 0\n");
    CHECK(q.at(0, 1) == ExtReal(Rational(-1, 2)));
    CHECK(q.at(1, 0).is_bottom());

    CHECK_THROWS_AS(parse_matrix("2 2\n0 0\n0\n"), ParseError);       // too few entries
    CHECK_THROWS_AS(parse_matrix("2 2\n0 0\n0 0 0\n"), ParseError);   // too many
    CHECK_THROWS_AS(parse_matrix("2 2\n0 x\n0 0\n"), ParseError);     // bad token
    CHECK_THROWS_AS(parse_matrix("0 2\n"), ParseError);               // empty shape
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/m.mat"), ParseError);
}
