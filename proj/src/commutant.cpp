#include "tropcomm/commutant.hpp"

namespace tropcomm {

namespace {

void require_real_normal(const TropMatrix& A, const char* who) {
    if (!is_normal(A)) throw NotNormal(std::string(who) + ": first operand must be normal");
    if (!is_real(A)) throw NotReal(std::string(who) + ": first operand must be real");
}

void require_same_order(const TropMatrix& A, const TropMatrix& B, const char* who) {
    if (A.rows() != B.rows())
        throw DimensionMismatch(std::string(who) + ": operands differ in order");
}

Rational entry(const TropMatrix& A, int i, int j) { return A.at(i, j).value(); }

} // namespace

WitnessSet witness_winners(const TropMatrix& A, const TropMatrix& X) {
    require_real_normal(A, "witness_winners");
    if (!is_normal(X)) throw NotNormal("witness_winners: second operand must be normal");
    require_same_order(A, X, "witness_winners");

    TropMatrix ax = mat_mul(A, X), xa = mat_mul(X, A);
    if (ax != xa) return WitnessSet();

    int n = A.rows();
    std::vector<std::vector<std::pair<int, int>>> pairs(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<int> k1, k2;
            for (int k = 0; k < n; ++k) {
                if (t_mul(A.at(i, k), X.at(k, j)) == ax.at(i, j)) k1.push_back(k);
                if (t_mul(X.at(i, k), A.at(k, j)) == xa.at(i, j)) k2.push_back(k);
            }
            auto& cell = pairs[static_cast<std::size_t>(i) * n + j];
            for (int a : k1)
                for (int b : k2) cell.emplace_back(a, b);
        }
    return WitnessSet(n, std::move(pairs));
}

CommutationReport commutes(const TropMatrix& A, const TropMatrix& X) {
    require_real_normal(A, "commutes");
    if (!is_normal(X)) throw NotNormal("commutes: second operand must be normal");
    require_same_order(A, X, "commutes");

    CommutationReport r;
    TropMatrix ax = mat_mul(A, X), xa = mat_mul(X, A);
    r.commutes = ax == xa;
    if (!r.commutes) return r;
    r.product = ax;
    r.in_omega_A = ax == A;
    r.in_omega_prime = ax == X;
    r.witnesses = witness_winners(A, X);
    return r;
}

DiffConstraintSystem omega_w_system(const TropMatrix& A, const Winner& w) {
    return omega_w_system(A, w, Relabeling::row_major(A.rows()));
}

DiffConstraintSystem omega_w_system(const TropMatrix& A, const Winner& w,
                                    const Relabeling& labels) {
    require_real_normal(A, "omega_w_system");
    int n = A.rows();
    if (w.order() != n || labels.order() != n)
        throw DimensionMismatch("omega_w_system: winner/labels order mismatch");

    std::vector<std::string> names;
    for (int v = 0; v < labels.size(); ++v) names.push_back(labels.var_name(v));
    DiffConstraintSystem sys(names);
    for (int v = 0; v < labels.size(); ++v) sys.bound_above(v, 0);

    // Terms are c + V with V a variable or the constant zero of a diagonal slot.
    struct Term {
        Rational c;
        int var; // -1 when the slot is diagonal
    };
    auto eq = [&](const Term& l, const Term& r) {
        if (l.var >= 0 && r.var >= 0) sys.fix_diff(l.var, r.var, r.c - l.c);
        else if (l.var >= 0) sys.fix(l.var, r.c - l.c);
        else if (r.var >= 0) sys.fix(r.var, l.c - r.c);
    };
    auto le = [&](const Term& l, const Term& r) {
        if (l.var >= 0 && r.var >= 0) sys.bound_diff_above(l.var, r.var, r.c - l.c);
        else if (l.var >= 0) sys.bound_above(l.var, r.c - l.c);
        else if (r.var >= 0) sys.bound_below(r.var, ExtReal(l.c - r.c));
    };
    auto var_of = [&](int i, int j) { return i == j ? -1 : labels.index(i, j); };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto [s, t] = w.at(i, j);
            Term lhs{entry(A, i, s), var_of(s, j)}; // a_is + x_sj
            Term rhs{entry(A, t, j), var_of(i, t)}; // x_it + a_tj
            bool tautological = (s == i && t == j) || (s == j && t == i);
            if (!tautological) eq(lhs, rhs);
            for (int s2 = 0; s2 < n; ++s2)
                if (s2 != s) le(Term{entry(A, i, s2), var_of(s2, j)}, lhs);
            for (int t2 = 0; t2 < n; ++t2)
                if (t2 != t) le(Term{entry(A, t2, j), var_of(i, t2)}, rhs);
        }
    return sys;
}

bool omega_w_empty_quick(const TropMatrix& A, const Winner& w) {
    require_real_normal(A, "omega_w_empty_quick");
    int n = A.rows();
    if (w.order() != n) throw DimensionMismatch("omega_w_empty_quick: order mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto [s, t] = w.at(i, j);
            if (s == t) continue;
            if ((s == i && t == j) || (s == j && t == i)) continue;
            if (w.at(s, t) != std::make_pair(i, j)) continue;
            if (entry(A, i, s) + entry(A, s, i) != entry(A, j, t) + entry(A, t, j))
                return true;
        }
    return false;
}

int omega_w_dim_bound(const Winner& w) {
    int n = w.order();
    int non_tautological = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto [s, t] = w.at(i, j);
            if (!((s == i && t == j) || (s == j && t == i))) ++non_tautological;
        }
    return n * n - n - non_tautological;
}

std::pair<TropMatrix, TropMatrix> neigh_identity_box(const TropMatrix& A) {
    require_real_normal(A, "neigh_identity_box");
    return {identity(A.rows()), const_matrix(ExtReal(min_offdiag(A)), A.rows())};
}

std::pair<TropMatrix, TropMatrix> neigh_zero_box(const TropMatrix& A) {
    require_real_normal(A, "neigh_zero_box");
    if (!is_strictly_normal(A))
        throw DomainError("neigh_zero_box: strictly normal matrix required");
    return {const_matrix(ExtReal(max_offdiag(A)), A.rows()), zero_matrix(A.rows())};
}

bool between_powers_check(const TropMatrix& A, const TropMatrix& B) {
    require_real_normal(A, "between_powers_check");
    if (!is_normal(B)) throw NotNormal("between_powers_check: second operand must be normal");
    require_same_order(A, B, "between_powers_check");
    if (A.rows() < 2) throw DomainError("between_powers_check: order >= 2 required");
    return mat_le(mat_pow(A, A.rows() - 2), B) && mat_le(B, kleene_star(A));
}

bool max_product_criterion(const TropMatrix& A, const TropMatrix& B) {
    if (!is_normal(A) || !is_normal(B))
        throw NotNormal("max_product_criterion: normal operands required");
    require_same_order(A, B, "max_product_criterion");
    TropMatrix m = mat_add(A, B);
    int n = A.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!(t_mul(A.at(i, k), B.at(k, j)) <= m.at(i, j))) return false;
    return true;
}

UnitCommuter find_unit_commuter(const TropMatrix& A) {
    require_real_normal(A, "find_unit_commuter");
    int n = A.rows();
    if (n < 2) throw DomainError("find_unit_commuter: order >= 2 required");

    UnitCommuter u{0, 1, Rational(1)};
    bool found_zero = false;
    for (int i = 0; i < n && !found_zero; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && A.at(i, j) == ExtReal(0)) {
                u = {i, j, Rational(1)};
                found_zero = true;
                break;
            }
    if (!found_zero) u.eps = -max_offdiag(A) / 2; // strictly normal, so M(A) < 0

    TropMatrix e = unit_perturbation(n, u.i, u.j, ExtReal(-u.eps));
    if (mat_mul(A, e) != mat_mul(e, A))
        throw TropError("find_unit_commuter: constructed perturbation fails to commute");
    return u;
}

} // namespace tropcomm
