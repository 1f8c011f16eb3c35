#pragma once

#include "tropcomm/constraint_system.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/relabeling.hpp"

namespace tropcomm {

// Entrywise least upper bound of {X : AX = XA = A} read off row and column
// differences of A; see the bars inequalities underline(A) <= A <= overline(A).
TropMatrix compute_underline(const TropMatrix& A);

// {X normal : X <= underline(A)} as a constraint system over the off-diagonal
// variables (pure box, no difference constraints).
DiffConstraintSystem lower_box(const TropMatrix& A);
DiffConstraintSystem lower_box(const TropMatrix& A, const Relabeling& labels);

// {X normal : A <= underline(X)}: for every off-diagonal (k,j) the bound
// a_kj <= x_kj plus the row and column difference bounds through each third
// index, on top of the normality box x <= 0.
DiffConstraintSystem upper_set_system(const TropMatrix& A);
DiffConstraintSystem upper_set_system(const TropMatrix& A, const Relabeling& labels);

// Entrywise least element of {X : A <= underline(X)}: tighten the upper set
// system and read each variable's lower bound. Infeasibility cannot happen for
// a real normal input and is reported as an internal error.
TropMatrix compute_overline(const TropMatrix& A);
TropMatrix compute_overline(const TropMatrix& A, const Relabeling& labels);

// underline(A) <= A <= overline(A).
bool bars_check(const TropMatrix& A);

// The alcoved polytope C_A in R^(n-1): a_in <= x_i <= -a_ni and
// a_ik <= x_i - x_k <= -a_ki. Its bounds matrix is A itself.
DiffConstraintSystem c_polytope(const TropMatrix& A);

} // namespace tropcomm
