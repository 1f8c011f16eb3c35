#pragma once

#include <initializer_list>
#include <vector>

#include "tropcomm/ext_real.hpp"

namespace tropcomm {

// Dense matrix over the max-plus carrier. Indices are 0-based.
class TropMatrix {
public:
    TropMatrix() : rows_(0), cols_(0) {}
    TropMatrix(int rows, int cols, ExtReal fill = ExtReal::bottom());
    TropMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    ExtReal& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const ExtReal& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<ExtReal> data_;
};

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);   // entrywise max
TropMatrix mat_min(const TropMatrix& a, const TropMatrix& b);   // entrywise min
bool mat_le(const TropMatrix& a, const TropMatrix& b);          // entrywise <=
TropMatrix transpose(const TropMatrix& a);
TropMatrix scalar_mul(const ExtReal& lambda, const TropMatrix& a);

TropMatrix identity(int n);                 // 0 diagonal, -inf off it
TropMatrix zero_matrix(int n);              // all entries 0
TropMatrix const_matrix(const ExtReal& r, int n); // K(r): 0 diagonal, r off it; r <= 0
TropMatrix unit_perturbation(int n, int i, int j, const ExtReal& r); // zero except (i,j)=r
TropMatrix diag(const std::vector<ExtReal>& d);

bool is_real(const TropMatrix& a);            // no -inf entries
bool is_normal(const TropMatrix& a);          // square, zero diagonal, entries <= 0
bool is_strictly_normal(const TropMatrix& a); // normal with off-diagonal < 0
bool is_border(const TropMatrix& a);          // normal with some off-diagonal in {0, -inf}

// Powers of a normal matrix. mat_pow uses binary exponentiation; kleene_star
// returns A^(n-1) via repeated squaring (powers of normal matrices stabilize there).
TropMatrix mat_pow(const TropMatrix& a, int k);
TropMatrix kleene_star(const TropMatrix& a);

// A0 = A * diag(-row(A, n)): shifts column j by -a_{nj} so the last row is zero.
// Requires a real last row.
TropMatrix normalize_a0(const TropMatrix& a);

Rational min_offdiag(const TropMatrix& a); // m(A): least entry of a real normal matrix
Rational max_offdiag(const TropMatrix& a); // M(A): greatest off-diagonal entry

} // namespace tropcomm
