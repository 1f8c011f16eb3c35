#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

// Data for the cyclic perturbation families: P(-p,-eps) carries -p_i on the
// cyclic subdiagonal ((i+1,i) plus the (1,n) corner) and -eps elsewhere;
// Q(-p,-eps) additionally requires n >= 4, carries -eps on the second cyclic
// subdiagonal ((i+2,i)) and 0 on the remaining off-diagonal entries.
struct PerturbationSpec {
    std::vector<Rational> p; // positive weights, length n
    Rational delta;          // >= 0
    Rational eps;            // >= 0
};

// Magnitudes 0 < a <= b are of the same size iff b <= 2a.
bool same_size(const Rational& a, const Rational& b);

// Two random normal matrices with off-diagonal entries in [2r, r], r < 0:
// every pair from that box commutes with product A + B.
std::pair<TropMatrix, TropMatrix> make_box_pair(const Rational& r, int n, std::uint64_t seed);

TropMatrix make_p(const std::vector<Rational>& p, const Rational& eps);
TropMatrix make_q(const std::vector<Rational>& p, const Rational& eps);

struct PqReport {
    bool skipped = false;       // hypothesis delta + eps <= min p violated
    bool p_clause_pass = false; // P(-p,-d) P(-p,-e) = P(-p,-e) P(-p,-d) = P(-(d+e,..), -min)
    bool q_clause_applicable = false; // n >= 4
    bool q_clause_pass = false; // Q products: Q(-(min,..,min), 0) at n = 4, zero matrix at n >= 5
    TropMatrix p_product;
    TropMatrix q_product;
};

PqReport check_pq_theorem(const PerturbationSpec& spec);

} // namespace tropcomm
