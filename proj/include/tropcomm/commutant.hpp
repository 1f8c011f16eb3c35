#pragma once

#include <optional>
#include <utility>

#include "tropcomm/constraint_system.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/relabeling.hpp"
#include "tropcomm/winner.hpp"

namespace tropcomm {

struct CommutationReport {
    bool commutes = false;
    std::optional<TropMatrix> product; // set when AX == XA
    bool in_omega_A = false;           // product equals A
    bool in_omega_prime = false;       // product equals X
    WitnessSet witnesses;              // empty unless commuting
};

// A real normal, X normal of the same order.
CommutationReport commutes(const TropMatrix& A, const TropMatrix& X);

// Per-position argmax index sets of (AX)_ij and (XA)_ij, factored.
WitnessSet witness_winners(const TropMatrix& A, const TropMatrix& X);

// The constraints cutting out Omega_w(A) from the box [-inf,0]^(n^2-n):
// per off-diagonal (i,j) one linear equality (skipped when tautological,
// i.e. w(i,j) in {(i,j),(j,i)}) plus 2n-2 dominance inequalities.
DiffConstraintSystem omega_w_system(const TropMatrix& A, const Winner& w);
DiffConstraintSystem omega_w_system(const TropMatrix& A, const Winner& w,
                                    const Relabeling& labels);

// Quick emptiness certificate: positions (i,j) and (s,t)=w(i,j) that point at
// each other force parallel hyperplanes; distinct offsets give an empty cell.
bool omega_w_empty_quick(const TropMatrix& A, const Winner& w);

// n^2-n minus the number of positions whose equality is not tautological.
int omega_w_dim_bound(const Winner& w);

// Box neighborhoods that commute entrywise: [I, K(m(A))] around the identity,
// and [K(M(A)), 0] around the zero matrix (strictly normal A only).
std::pair<TropMatrix, TropMatrix> neigh_identity_box(const TropMatrix& A);
std::pair<TropMatrix, TropMatrix> neigh_zero_box(const TropMatrix& A);

// A^(n-2) <= B <= A* forces AB = BA = A*.
bool between_powers_check(const TropMatrix& A, const TropMatrix& B);

// a_ik + b_kj <= (A + B)_ij for all i,j,k forces AB = BA = A + B.
bool max_product_criterion(const TropMatrix& A, const TropMatrix& B);

struct UnitCommuter {
    int i, j;     // 0-based off-diagonal position
    Rational eps; // E_ij(-eps) commutes with A
};

// Every real normal matrix has a commuting unit perturbation: any position
// with a zero entry works for all eps, otherwise eps = -M(A)/2. The returned
// perturbation is verified before returning.
UnitCommuter find_unit_commuter(const TropMatrix& A);

} // namespace tropcomm
