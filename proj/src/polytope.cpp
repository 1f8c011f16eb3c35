#include "tropcomm/polytope.hpp"

namespace tropcomm {

namespace {

void require_real_normal(const TropMatrix& A, const char* who) {
    if (!is_normal(A)) throw NotNormal(std::string(who) + ": normal matrix required");
    if (!is_real(A)) throw NotReal(std::string(who) + ": real matrix required");
}

Rational entry(const TropMatrix& A, int i, int j) { return A.at(i, j).value(); }

std::vector<std::string> names_of(const Relabeling& labels) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(labels.size()));
    for (int v = 0; v < labels.size(); ++v) names.push_back(labels.var_name(v));
    return names;
}

} // namespace

TropMatrix compute_underline(const TropMatrix& A) {
    require_real_normal(A, "compute_underline");
    int n = A.rows();
    TropMatrix u = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Extremes of row(A,i) - row(A,j) and col(A,i) - col(A,j).
            Rational mr, MR, mc, MC;
            for (int k = 0; k < n; ++k) {
                Rational dr = entry(A, i, k) - entry(A, j, k);
                Rational dc = entry(A, k, i) - entry(A, k, j);
                if (k == 0) { mr = MR = dr; mc = MC = dc; continue; }
                if (dr < mr) mr = dr;
                if (dr > MR) MR = dr;
                if (dc < mc) mc = dc;
                if (dc > MC) MC = dc;
            }
            Rational uij = entry(A, i, j);
            if (mr < uij) uij = mr;
            if (-MC < uij) uij = -MC;
            Rational uji = entry(A, j, i);
            if (-MR < uji) uji = -MR;
            if (mc < uji) uji = mc;
            u.at(i, j) = ExtReal(uij);
            u.at(j, i) = ExtReal(uji);
        }
    return u;
}

DiffConstraintSystem lower_box(const TropMatrix& A) {
    return lower_box(A, Relabeling::row_major(A.rows()));
}

DiffConstraintSystem lower_box(const TropMatrix& A, const Relabeling& labels) {
    require_real_normal(A, "lower_box");
    if (labels.order() != A.rows()) throw DimensionMismatch("lower_box: labels order mismatch");
    TropMatrix u = compute_underline(A);
    DiffConstraintSystem sys(names_of(labels));
    for (int v = 0; v < labels.size(); ++v) {
        auto [i, j] = labels.position(v);
        sys.bound_above(v, entry(u, i, j));
    }
    return sys;
}

DiffConstraintSystem upper_set_system(const TropMatrix& A) {
    return upper_set_system(A, Relabeling::row_major(A.rows()));
}

DiffConstraintSystem upper_set_system(const TropMatrix& A, const Relabeling& labels) {
    require_real_normal(A, "upper_set_system");
    int n = A.rows();
    if (labels.order() != n) throw DimensionMismatch("upper_set_system: labels order mismatch");

    DiffConstraintSystem sys(names_of(labels));
    for (int v = 0; v < labels.size(); ++v) sys.bound_above(v, 0);

    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (k == j) continue;
            ExtReal akj(entry(A, k, j));
            sys.bound_below(labels.index(k, j), akj);
            for (int i = 0; i < n; ++i) {
                if (i == k || i == j) continue;
                sys.bound_diff_below(labels.index(i, j), labels.index(i, k), akj);
                sys.bound_diff_below(labels.index(k, i), labels.index(j, i), akj);
            }
        }
    return sys;
}

TropMatrix compute_overline(const TropMatrix& A) {
    return compute_overline(A, Relabeling::row_major(A.rows()));
}

TropMatrix compute_overline(const TropMatrix& A, const Relabeling& labels) {
    auto tight = tighten(upper_set_system(A, labels));
    if (!tight)
        throw TropError("compute_overline: upper set system unexpectedly empty");
    TropMatrix o = identity(A.rows());
    for (int v = 0; v < labels.size(); ++v) {
        auto [i, j] = labels.position(v);
        o.at(i, j) = tight->lower(v, tight->affine());
    }
    return o;
}

bool bars_check(const TropMatrix& A) {
    return mat_le(compute_underline(A), A) && mat_le(A, compute_overline(A));
}

DiffConstraintSystem c_polytope(const TropMatrix& A) {
    if (!is_normal(A)) throw NotNormal("c_polytope: normal matrix required");
    std::vector<std::string> names;
    for (int i = 1; i < A.rows(); ++i) names.push_back("x_" + std::to_string(i));
    return DiffConstraintSystem(A, std::move(names));
}

} // namespace tropcomm
