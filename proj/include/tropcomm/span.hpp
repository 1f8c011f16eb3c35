#pragma once

#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

struct SpanMembership {
    bool member = false;
    std::vector<Rational> coefficients; // residuation lambda_j = min_i (x_i - a_ij)
    std::vector<Rational> projection;   // A (.) lambda, the closest span point below x
};

// x is in the column span of real A iff applying the greatest feasible
// combination lands back on x. The certificate is returned either way.
SpanMembership span_member(const TropMatrix& A, const std::vector<Rational>& x);

struct SpanContainment {
    bool contained = true;
    int failing_column = -1; // 0-based column of B outside span(A)
    SpanMembership failing_detail;
};

// Every column of B in span(A); both real with the same row count.
SpanContainment span_contains(const TropMatrix& A, const TropMatrix& B);

} // namespace tropcomm
