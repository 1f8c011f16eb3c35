#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

// Conjunction of bounds c <= y_i <= b and c' <= y_i - y_k <= b'. Stored as the
// (N+1)x(N+1) lower-bound matrix H: H(i,k) is the best known lower bound on
// y_i - y_k, with the extra affine node y_N == 0, zero diagonal and -inf for
// "no constraint". Upper bounds live transposed (y_i <= u  <=>  H(k,i) >= -u),
// so they must be finite; an absent upper bound is -inf in the transposed slot.
// For a normal matrix A this is exactly the alcoved-polytope reading of A with
// the affine node last.
class DiffConstraintSystem {
public:
    explicit DiffConstraintSystem(std::vector<std::string> names);
    DiffConstraintSystem(const TropMatrix& bounds, std::vector<std::string> names);

    static DiffConstraintSystem from_bounds_matrix(const TropMatrix& bounds,
                                                   std::vector<std::string> names = {});

    int nvars() const { return static_cast<int>(names_.size()); }
    int affine() const { return nvars(); } // index of the constant-zero node
    const std::vector<std::string>& var_names() const { return names_; }
    const TropMatrix& bounds_matrix() const { return lb_; }

    ExtReal lower(int i, int k) const { return lb_.at(i, k); } // on y_i - y_k
    // Merge in constraints (each keeps the tighter of old and new bound).
    void bound_below(int var, const ExtReal& lo);
    void bound_above(int var, const Rational& hi);
    void bound_diff_below(int i, int k, const ExtReal& lo);
    void bound_diff_above(int i, int k, const Rational& hi);
    void fix(int var, const Rational& v);
    void fix_diff(int i, int k, const Rational& v); // y_i - y_k = v

    // Tropical evaluation (lo + y_k <= y_i), so -inf coordinates behave.
    bool contains(const std::vector<ExtReal>& point) const;

    friend bool operator==(const DiffConstraintSystem& a, const DiffConstraintSystem& b) {
        return a.names_ == b.names_ && a.lb_ == b.lb_;
    }

private:
    std::vector<std::string> names_;
    TropMatrix lb_;
};

// Floyd-Warshall closure: every implied bound becomes explicit and tight.
// Returns nullopt when a positive cycle proves the system empty.
std::optional<DiffConstraintSystem> tighten(const DiffConstraintSystem& s);

bool is_empty(const DiffConstraintSystem& s);
bool is_tight(const DiffConstraintSystem& s);

// A feasible point with all-finite coordinates, drawn by sequential DBM
// instantiation over the closure. Deterministic for a fixed seed.
std::optional<std::vector<ExtReal>> sample_point(const DiffConstraintSystem& s,
                                                 std::uint64_t seed);

// Dimension of a tightened nonempty system: variables and the affine node are
// merged whenever both bound directions close to zero; each independent merge
// drops the dimension by one.
int polytope_dim(const DiffConstraintSystem& tight);

} // namespace tropcomm
