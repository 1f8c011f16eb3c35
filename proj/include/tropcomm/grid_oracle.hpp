#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropcomm/ext_real.hpp"
#include "tropcomm/matrix.hpp"

namespace tropcomm {

// Exhaustive desk-scale check of the commutant inclusions for a real normal
// 3x3 matrix A.  Every normal X with off-diagonal entries drawn from the
// alphabet is enumerated and classified; any failed inclusion is reported as
// a violation with the offending candidate.
//
// Checked per candidate X:
//   - AX = XA = A  implies  X <= underline(A)
//   - AX = XA = X  implies  overline(A) <= X
//   - AX = XA      implies  X satisfies the cell of its own first witness
//   - I <= X <= K(m(A))            implies  AX = XA = A
//   - K(M(A)) <= X <= 0 (A strict) implies  AX = XA = X
// and afterwards, for every distinct collected witness w, membership in the
// cell of w implies commutation (so the union of the cells is the commutant
// on the grid).
struct GridOracleReport {
    std::uint64_t total = 0;          // candidates enumerated
    std::uint64_t commuting = 0;      // AX == XA
    std::uint64_t omega_a = 0;        // product == A
    std::uint64_t omega_prime = 0;    // product == X
    std::size_t winners_checked = 0;  // distinct first witnesses
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

GridOracleReport run_grid_oracle(const TropMatrix& a, const std::vector<ExtReal>& alphabet,
                                 std::uint64_t cap = 10000000);

// The default alphabet {0, -1, -2, -inf}: 4^6 = 4096 candidates per run.
std::vector<ExtReal> default_grid_alphabet();

} // namespace tropcomm
