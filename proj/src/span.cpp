#include "tropcomm/span.hpp"

namespace tropcomm {

SpanMembership span_member(const TropMatrix& A, const std::vector<Rational>& x) {
    if (!is_real(A)) throw NotReal("span_member: real matrix required");
    if (static_cast<int>(x.size()) != A.rows())
        throw DimensionMismatch("span_member: point arity vs matrix rows");
    if (A.cols() == 0) throw DimensionMismatch("span_member: no generators");

    SpanMembership r;
    r.coefficients.reserve(static_cast<std::size_t>(A.cols()));
    for (int j = 0; j < A.cols(); ++j) {
        Rational lam = x[0] - A.at(0, j).value();
        for (int i = 1; i < A.rows(); ++i) {
            Rational cand = x[static_cast<std::size_t>(i)] - A.at(i, j).value();
            if (cand < lam) lam = cand;
        }
        r.coefficients.push_back(lam);
    }
    r.member = true;
    for (int i = 0; i < A.rows(); ++i) {
        Rational best = r.coefficients[0] + A.at(i, 0).value();
        for (int j = 1; j < A.cols(); ++j) {
            Rational cand = r.coefficients[static_cast<std::size_t>(j)] + A.at(i, j).value();
            if (cand > best) best = cand;
        }
        r.projection.push_back(best);
        if (best != x[static_cast<std::size_t>(i)]) r.member = false;
    }
    return r;
}

SpanContainment span_contains(const TropMatrix& A, const TropMatrix& B) {
    if (!is_real(A) || !is_real(B)) throw NotReal("span_contains: real matrices required");
    if (A.rows() != B.rows()) throw DimensionMismatch("span_contains: row counts differ");

    SpanContainment r;
    for (int j = 0; j < B.cols(); ++j) {
        std::vector<Rational> col;
        col.reserve(static_cast<std::size_t>(B.rows()));
        for (int i = 0; i < B.rows(); ++i) col.push_back(B.at(i, j).value());
        SpanMembership m = span_member(A, col);
        if (!m.member) {
            r.contained = false;
            r.failing_column = j;
            r.failing_detail = std::move(m);
            return r;
        }
    }
    return r;
}

} // namespace tropcomm
