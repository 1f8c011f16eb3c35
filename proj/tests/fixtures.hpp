#pragma once

// Frozen matrices used across the test binaries. Kept separate from the
// library's built-in reference suite on purpose: these are the values the
// tests were written against, so a regression in the library cannot silently
// rewrite the expectations.

#include "tropcomm/matrix.hpp"
#include "tropcomm/winner.hpp"

namespace fx {

using tropcomm::ExtReal;
using tropcomm::TropMatrix;

inline const ExtReal o = ExtReal::bottom();

// 4x4 commuting pair and their product.
inline TropMatrix a4() {
    return TropMatrix{{0, -4, -6, -3}, {-6, 0, -4, -3}, {-3, -6, 0, -3}, {-6, -3, -3, 0}};
}
inline TropMatrix b4() {
    return TropMatrix{{0, -4, -4, -6}, {-2, 0, -3, -4}, {-5, -6, 0, -5}, {-6, -5, -2, 0}};
}
inline TropMatrix ab4() {
    return TropMatrix{{0, -4, -4, -3}, {-2, 0, -3, -3}, {-3, -6, 0, -3}, {-5, -3, -2, 0}};
}

// Winner map certifying a4 * b4 == b4 * a4 (1-based in the table).
inline tropcomm::Winner w4() {
    tropcomm::Winner w(4);
    const int t[12][4] = {{1, 2, 1, 1}, {1, 3, 1, 3}, {1, 4, 4, 1}, {2, 1, 2, 1},
                          {2, 3, 2, 3}, {2, 4, 4, 2}, {3, 1, 1, 3}, {3, 2, 2, 2},
                          {3, 4, 4, 3}, {4, 1, 2, 3}, {4, 2, 2, 4}, {4, 3, 4, 3}};
    for (const auto& e : t) w.set(e[0] - 1, e[1] - 1, {e[2] - 1, e[3] - 1});
    return w;
}

// 3x3 running example B with its derived bounds.
inline TropMatrix b3() { return TropMatrix{{0, -3, -1}, {-4, 0, -6}, {-5, 0, 0}}; }
inline TropMatrix b3_under() { return TropMatrix{{0, -3, -3}, {-5, 0, -6}, {-5, -2, 0}}; }
inline TropMatrix b3_over() { return TropMatrix{{0, -1, -1}, {-4, 0, -5}, {-4, 0, 0}}; }

// Counterexample after the interval bounds: underline/overline alone do not
// characterize the commutant.
inline TropMatrix bars_x() { return TropMatrix{{0, -2, -2}, {-4, 0, -5}, {-4, 0, 0}}; }
inline TropMatrix bars_xb() { return TropMatrix{{0, -2, -1}, {-4, 0, -5}, {-4, 0, 0}}; }

// Counterexample inside [B*, 0]: membership in the star interval is not
// sufficient either.
inline TropMatrix star_x() { return TropMatrix{{0, -1, -1}, {0, 0, -1}, {-1, 0, 0}}; }
inline TropMatrix star_xprod() { return TropMatrix{{0, -1, -1}, {0, 0, -1}, {0, 0, 0}}; }

// Cyclic perturbation family at p = (4,3,5).
inline TropMatrix p_eps2() { return TropMatrix{{0, -2, -5}, {-4, 0, -2}, {-2, -3, 0}}; }
inline TropMatrix p_eps1() { return TropMatrix{{0, -1, -5}, {-4, 0, -1}, {-1, -3, 0}}; }
inline TropMatrix p_eps0() { return TropMatrix{{0, 0, -5}, {-4, 0, 0}, {0, -3, 0}}; }
inline TropMatrix p_prod() { return TropMatrix{{0, -1, -3}, {-3, 0, -1}, {-1, -3, 0}}; }

// Span-nesting counterexample pair.
inline TropMatrix ult_a() { return TropMatrix{{0, -1, -3}, {0, 0, -4}, {0, 0, 0}}; }
inline TropMatrix ult_b() { return TropMatrix{{0, -1, -2}, {0, 0, -4}, {0, 0, 0}}; }
inline TropMatrix ult_ab() { return TropMatrix{{0, -1, -2}, {0, 0, -2}, {0, 0, 0}}; }
inline TropMatrix ult_ba() { return TropMatrix{{0, -1, -2}, {0, 0, -3}, {0, 0, 0}}; }

// Order-7 difference system for {X : B <= underline(X)} and its closure.
inline TropMatrix h7() {
    return TropMatrix{{0, 0, o, o, o, -1, -3},  {-6, 0, o, -3, o, o, -1},
                      {o, o, 0, -5, -6, o, -4}, {o, -4, -1, 0, o, o, -6},
                      {o, o, 0, o, 0, -4, -5},  {-5, o, o, o, -3, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0}};
}
inline TropMatrix h7_star() {
    return TropMatrix{{0, 0, -1, -1, -1, -1, -1},  {-1, 0, -1, -1, -1, -1, -1},
                      {-4, -4, 0, -4, -4, -4, -4}, {-5, -4, -1, 0, -5, -5, -5},
                      {-4, -4, 0, -4, 0, -4, -4},  {0, 0, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0}};
}

} // namespace fx
