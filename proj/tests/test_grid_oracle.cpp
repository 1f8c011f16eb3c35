#include "doctest.h"

#include "fixtures.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/grid_oracle.hpp"

using namespace tropcomm;

TEST_CASE("default alphabet") {
    const auto a = default_grid_alphabet();
    REQUIRE(a.size() == 4);
    CHECK(a[0] == ExtReal(0));
    CHECK(a[3].is_bottom());
}

TEST_CASE("exhaustive check over the running example") {
    const GridOracleReport r = run_grid_oracle(fx::b3(), default_grid_alphabet());
    CHECK(r.total == 4096);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    // Regression pins from the exhaustive enumeration.
    CHECK(r.commuting == 1200);
    CHECK(r.omega_a == 2);
    CHECK(r.omega_prime == 51);
    CHECK(r.winners_checked == 65);
}

TEST_CASE("zero matrix commutes with the whole grid") {
    const GridOracleReport r = run_grid_oracle(zero_matrix(3), default_grid_alphabet());
    CHECK(r.total == 4096);
    CHECK(r.commuting == 4096); // left and right products both collapse to 0
    CHECK(r.omega_a == 4096);
    CHECK(r.omega_prime == 1); // only X = 0 reproduces itself
    CHECK(r.ok());
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(run_grid_oracle(fx::b3(), {ExtReal(-1), ExtReal(-2)}), DomainError); // no 0
    CHECK_THROWS_AS(run_grid_oracle(fx::b3(), {ExtReal(0), ExtReal(1)}), DomainError);
    CHECK_THROWS_AS(run_grid_oracle(fx::b3(), {}), DomainError);
    CHECK_THROWS_AS(run_grid_oracle(fx::a4(), default_grid_alphabet()), DimensionMismatch);
    CHECK_THROWS_AS(run_grid_oracle(fx::b3(), default_grid_alphabet(), 10), DomainError); // cap
}

TEST_CASE("small alphabet still anchors on the zero matrix") {
    // {0, -inf} grid: 64 candidates.
    const GridOracleReport r =
        run_grid_oracle(fx::b3(), {ExtReal(0), ExtReal::bottom()});
    CHECK(r.total == 64);
    CHECK(r.ok());
    CHECK(r.commuting >= 2); // at least I and the zero matrix
}
