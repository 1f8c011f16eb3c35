#include "tropcomm/matrix.hpp"

#include <string>

namespace tropcomm {

namespace {

void require_same_shape(const TropMatrix& a, const TropMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
}

void require_normal(const TropMatrix& a, const char* op) {
    if (!is_normal(a)) throw NotNormal(std::string(op) + ": matrix is not normal");
}

} // namespace

TropMatrix::TropMatrix(int rows, int cols, ExtReal fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimensions");
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = static_cast<int>(r.size());
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionMismatch("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
    TropMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            ExtReal best; // -inf
            for (int k = 0; k < a.cols(); ++k)
                best = t_add(best, t_mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = best;
        }
    return c;
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
    require_same_shape(a, b, "mat_add");
    TropMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = t_add(a.at(i, j), b.at(i, j));
    return c;
}

TropMatrix mat_min(const TropMatrix& a, const TropMatrix& b) {
    require_same_shape(a, b, "mat_min");
    TropMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = t_min(a.at(i, j), b.at(i, j));
    return c;
}

bool mat_le(const TropMatrix& a, const TropMatrix& b) {
    require_same_shape(a, b, "mat_le");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) <= b.at(i, j))) return false;
    return true;
}

TropMatrix transpose(const TropMatrix& a) {
    TropMatrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
    return c;
}

TropMatrix scalar_mul(const ExtReal& lambda, const TropMatrix& a) {
    TropMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = t_mul(lambda, a.at(i, j));
    return c;
}

TropMatrix identity(int n) {
    TropMatrix c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, i) = ExtReal(0);
    return c;
}

TropMatrix zero_matrix(int n) { return TropMatrix(n, n, ExtReal(0)); }

TropMatrix const_matrix(const ExtReal& r, int n) {
    if (r > ExtReal(0)) throw DomainError("const_matrix: r must be <= 0");
    TropMatrix c(n, n, r);
    for (int i = 0; i < n; ++i) c.at(i, i) = ExtReal(0);
    return c;
}

TropMatrix unit_perturbation(int n, int i, int j, const ExtReal& r) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw DomainError("unit_perturbation: need distinct indices inside the matrix");
    if (r > ExtReal(0)) throw DomainError("unit_perturbation: r must be <= 0");
    TropMatrix c = zero_matrix(n);
    c.at(i, j) = r;
    return c;
}

TropMatrix diag(const std::vector<ExtReal>& d) {
    TropMatrix c(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < c.rows(); ++i) c.at(i, i) = d[static_cast<std::size_t>(i)];
    return c;
}

bool is_real(const TropMatrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j).is_bottom()) return false;
    return true;
}

bool is_normal(const TropMatrix& a) {
    if (!a.is_square()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (i == j && a.at(i, j) != ExtReal(0)) return false;
            if (i != j && a.at(i, j) > ExtReal(0)) return false;
        }
    return true;
}

bool is_strictly_normal(const TropMatrix& a) {
    if (!is_normal(a)) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && a.at(i, j) == ExtReal(0)) return false;
    return true;
}

bool is_border(const TropMatrix& a) {
    if (!is_normal(a)) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && (a.at(i, j) == ExtReal(0) || a.at(i, j).is_bottom())) return true;
    return false;
}

TropMatrix mat_pow(const TropMatrix& a, int k) {
    require_normal(a, "mat_pow");
    if (k < 0) throw DomainError("mat_pow: negative exponent");
    TropMatrix result = identity(a.rows());
    TropMatrix base = a;
    while (k > 0) {
        if (k & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return result;
}

TropMatrix kleene_star(const TropMatrix& a) {
    require_normal(a, "kleene_star");
    int n = a.rows();
    if (n <= 1) return identity(n);
    // Squaring log2(n-1) times overshoots A^(n-1), which is harmless: powers of a
    // normal matrix are constant from n-1 on.
    TropMatrix b = a;
    for (int reach = 1; reach < n - 1; reach *= 2) b = mat_mul(b, b);
    return b;
}

TropMatrix normalize_a0(const TropMatrix& a) {
    if (a.rows() == 0) throw DimensionMismatch("normalize_a0: empty matrix");
    int last = a.rows() - 1;
    if (a.cols() != a.rows()) throw DimensionMismatch("normalize_a0: square input expected");
    std::vector<ExtReal> shift;
    shift.reserve(static_cast<std::size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        if (a.at(last, j).is_bottom())
            throw NotReal("normalize_a0: -inf in last row");
        shift.push_back(t_neg(a.at(last, j)));
    }
    return mat_mul(a, diag(shift));
}

Rational min_offdiag(const TropMatrix& a) {
    require_normal(a, "min_offdiag");
    if (!is_real(a)) throw NotReal("min_offdiag: matrix has -inf entries");
    if (a.rows() < 2) throw DomainError("min_offdiag: order >= 2 required");
    ExtReal m = ExtReal(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = t_min(m, a.at(i, j));
    return m.value();
}

Rational max_offdiag(const TropMatrix& a) {
    require_normal(a, "max_offdiag");
    if (!is_real(a)) throw NotReal("max_offdiag: matrix has -inf entries");
    if (a.rows() < 2) throw DomainError("max_offdiag: order >= 2 required");
    ExtReal m; // -inf
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) m = t_add(m, a.at(i, j));
    return m.value();
}

} // namespace tropcomm
