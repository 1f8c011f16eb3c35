#include "tropcomm/grid_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "tropcomm/commutant.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/polytope.hpp"

namespace tropcomm {

namespace {

constexpr int kOrder = 3;
constexpr int kSlots = kOrder * kOrder - kOrder;

// Row-major off-diagonal positions, matching the variable order used by
// omega_w_system.
constexpr std::pair<int, int> kPositions[kSlots] = {{0, 1}, {0, 2}, {1, 0},
                                                    {1, 2}, {2, 0}, {2, 1}};

std::string describe(const TropMatrix& x, const std::string& what) {
    return what + "; candidate:\n" + format_matrix(x);
}

} // namespace

std::vector<ExtReal> default_grid_alphabet() {
    return {ExtReal(0), ExtReal(-1), ExtReal(-2), ExtReal()};
}

GridOracleReport run_grid_oracle(const TropMatrix& a, const std::vector<ExtReal>& alphabet,
                                 std::uint64_t cap) {
    if (a.rows() != kOrder || a.cols() != kOrder)
        throw DimensionMismatch("grid oracle expects a 3x3 matrix");
    if (!is_real(a)) throw NotReal("grid oracle expects a real matrix");
    if (!is_normal(a)) throw NotNormal("grid oracle expects a normal matrix");
    if (alphabet.empty()) throw DomainError("grid alphabet is empty");
    if (std::none_of(alphabet.begin(), alphabet.end(),
                     [](const ExtReal& v) { return v == ExtReal(0); }))
        throw DomainError("grid alphabet must contain 0");
    for (const ExtReal& v : alphabet)
        if (v > ExtReal(0)) throw DomainError("grid alphabet entries must be <= 0");

    std::uint64_t total = 1;
    for (int s = 0; s < kSlots; ++s) {
        total *= alphabet.size();
        if (total > cap) throw DomainError("grid oracle candidate cap exceeded");
    }

    GridOracleReport report;
    report.total = total;
    const TropMatrix lo = compute_underline(a);
    const TropMatrix hi = compute_overline(a);
    const auto [ibox_lo, ibox_hi] = neigh_identity_box(a);
    const bool strict = is_strictly_normal(a);
    const auto zbox = strict ? neigh_zero_box(a) : std::pair<TropMatrix, TropMatrix>{a, a};

    auto note = [&](std::string v) {
        if (report.violations.size() < 32) report.violations.push_back(std::move(v));
    };

    std::vector<bool> commutes_flag(total, false);
    std::vector<Winner> winners;

    std::vector<std::size_t> idx(kSlots, 0);
    TropMatrix x = zero_matrix(kOrder);
    for (std::uint64_t count = 0; count < total; ++count) {
        for (int s = 0; s < kSlots; ++s)
            x.at(kPositions[s].first, kPositions[s].second) = alphabet[idx[s]];

        const CommutationReport r = commutes(a, x);
        if (r.commutes) {
            ++report.commuting;
            if (r.in_omega_A) {
                ++report.omega_a;
                if (!mat_le(x, lo)) note(describe(x, "AX=XA=A but X is above underline(A)"));
            }
            if (r.in_omega_prime) {
                ++report.omega_prime;
                if (!mat_le(hi, x)) note(describe(x, "AX=XA=X but X is below overline(A)"));
            }
            const Winner w = r.witnesses.first();
            std::vector<ExtReal> offdiag(kSlots);
            for (int s = 0; s < kSlots; ++s)
                offdiag[s] = x.at(kPositions[s].first, kPositions[s].second);
            if (!omega_w_system(a, w).contains(offdiag))
                note(describe(x, "commuting X escapes the cell of its own witness"));
            if (std::find(winners.begin(), winners.end(), w) == winners.end())
                winners.push_back(w);
            commutes_flag[count] = true;
        }
        if (mat_le(ibox_lo, x) && mat_le(x, ibox_hi)) {
            if (!r.commutes || !r.in_omega_A)
                note(describe(x, "X in [I, K(m(A))] but AX=XA=A fails"));
        }
        if (strict && mat_le(zbox.first, x) && mat_le(x, zbox.second)) {
            if (!r.commutes || !r.in_omega_prime)
                note(describe(x, "X in [K(M(A)), 0] but AX=XA=X fails"));
        }

        for (int s = kSlots - 1; s >= 0; --s) {
            if (++idx[s] < alphabet.size()) break;
            idx[s] = 0;
        }
    }

    // Reverse inclusion: each collected cell must contain only commuting
    // grid members, so on the grid the commutant is exactly the union of
    // the witness cells.  Second pass re-enumerates to keep memory flat.
    report.winners_checked = winners.size();
    std::vector<DiffConstraintSystem> cells;
    cells.reserve(winners.size());
    for (const Winner& w : winners) cells.push_back(omega_w_system(a, w));
    std::fill(idx.begin(), idx.end(), 0);
    std::vector<ExtReal> offdiag(kSlots);
    for (std::uint64_t count = 0; count < total; ++count) {
        if (!commutes_flag[count]) {
            for (int s = 0; s < kSlots; ++s) offdiag[s] = alphabet[idx[s]];
            for (const DiffConstraintSystem& cell : cells) {
                if (cell.contains(offdiag)) {
                    for (int s = 0; s < kSlots; ++s)
                        x.at(kPositions[s].first, kPositions[s].second) = offdiag[s];
                    note(describe(x, "non-commuting X inside a witness cell"));
                    break;
                }
            }
        }
        for (int s = kSlots - 1; s >= 0; --s) {
            if (++idx[s] < alphabet.size()) break;
            idx[s] = 0;
        }
    }

    // Sanity anchors: the zero matrix always commutes; so does the identity
    // when -inf is in the alphabet.
    if (report.commuting == 0) note("zero matrix not seen as commuting");
    return report;
}

} // namespace tropcomm
