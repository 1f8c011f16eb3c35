#include "tropcomm/perturb.hpp"

#include <algorithm>

#include "tropcomm/sampling.hpp"

namespace tropcomm {

bool same_size(const Rational& a, const Rational& b) {
    if (a <= 0 || b < a) throw DomainError("same_size: need 0 < a <= b");
    return b <= 2 * a;
}

std::pair<TropMatrix, TropMatrix> make_box_pair(const Rational& r, int n, std::uint64_t seed) {
    if (r >= 0) throw DomainError("make_box_pair: r must be negative");
    if (n < 1) throw DomainError("make_box_pair: order must be positive");
    SplitMix64 rng(seed);
    auto draw = [&]() {
        TropMatrix m = identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) m.at(i, j) = ExtReal(uniform_rational(rng, 2 * r, r));
        return m;
    };
    TropMatrix a = draw();
    TropMatrix b = draw();
    return {a, b};
}

namespace {

void require_cycle_weights(const std::vector<Rational>& p, const Rational& eps, int min_n,
                           const char* who) {
    if (static_cast<int>(p.size()) < min_n)
        throw DomainError(std::string(who) + ": need order >= " + std::to_string(min_n));
    for (const Rational& pi : p)
        if (pi <= 0) throw DomainError(std::string(who) + ": cycle weights must be positive");
    if (eps < 0) throw DomainError(std::string(who) + ": eps must be >= 0");
}

} // namespace

TropMatrix make_p(const std::vector<Rational>& p, const Rational& eps) {
    require_cycle_weights(p, eps, 3, "make_p");
    int n = static_cast<int>(p.size());
    TropMatrix m = const_matrix(ExtReal(-eps), n);
    for (int i = 0; i < n; ++i)
        m.at((i + 1) % n, i) = ExtReal(-p[static_cast<std::size_t>(i)]);
    return m;
}

TropMatrix make_q(const std::vector<Rational>& p, const Rational& eps) {
    require_cycle_weights(p, eps, 4, "make_q");
    int n = static_cast<int>(p.size());
    TropMatrix m = zero_matrix(n);
    for (int i = 0; i < n; ++i) {
        m.at((i + 2) % n, i) = ExtReal(-eps);
        m.at((i + 1) % n, i) = ExtReal(-p[static_cast<std::size_t>(i)]);
    }
    return m;
}

PqReport check_pq_theorem(const PerturbationSpec& spec) {
    require_cycle_weights(spec.p, spec.eps, 3, "check_pq_theorem");
    if (spec.delta < 0) throw DomainError("check_pq_theorem: delta must be >= 0");
    int n = static_cast<int>(spec.p.size());

    PqReport report;
    Rational min_p = *std::min_element(spec.p.begin(), spec.p.end());
    if (spec.delta + spec.eps > min_p) {
        report.skipped = true;
        return report;
    }
    Rational m = std::min(spec.delta, spec.eps);
    Rational sum = spec.delta + spec.eps;

    // Built directly so the degenerate weights delta + eps = 0 or m = 0 are
    // representable (the public constructors insist on positive weights).
    TropMatrix pd = make_p(spec.p, spec.delta), pe = make_p(spec.p, spec.eps);
    TropMatrix p_expected = const_matrix(ExtReal(-m), n);
    for (int i = 0; i < n; ++i) p_expected.at((i + 1) % n, i) = ExtReal(-sum);
    report.p_product = mat_mul(pd, pe);
    report.p_clause_pass =
        report.p_product == p_expected && mat_mul(pe, pd) == p_expected;

    if (n >= 4) {
        // At order 4 the product keeps a -m cyclic subdiagonal.  From order 5
        // on, the zero off-band entries chain through every residue class
        // (3 + 3 = 1 mod 5 already), so the product is the zero matrix for
        // any delta, eps.
        report.q_clause_applicable = true;
        TropMatrix qd = make_q(spec.p, spec.delta), qe = make_q(spec.p, spec.eps);
        TropMatrix q_expected = zero_matrix(n);
        if (n == 4)
            for (int i = 0; i < n; ++i) q_expected.at((i + 1) % n, i) = ExtReal(-m);
        report.q_product = mat_mul(qd, qe);
        report.q_clause_pass =
            report.q_product == q_expected && mat_mul(qe, qd) == q_expected;
    }
    return report;
}

} // namespace tropcomm
