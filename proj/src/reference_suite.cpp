#include "tropcomm/reference_suite.hpp"

#include <functional>

#include "tropcomm/commutant.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/perturb.hpp"
#include "tropcomm/polytope.hpp"
#include "tropcomm/section.hpp"
#include "tropcomm/span.hpp"
#include "tropcomm/winner.hpp"

namespace tropcomm {

namespace {

const ExtReal o = ExtReal::bottom(); // -inf, kept short for the tables below

// 4x4 commuting pair with its winner map and product.
TropMatrix a4() {
    return {{0, -4, -6, -3}, {-6, 0, -4, -3}, {-3, -6, 0, -3}, {-6, -3, -3, 0}};
}
TropMatrix b4() {
    return {{0, -4, -4, -6}, {-2, 0, -3, -4}, {-5, -6, 0, -5}, {-6, -5, -2, 0}};
}
TropMatrix ab4() {
    return {{0, -4, -4, -3}, {-2, 0, -3, -3}, {-3, -6, 0, -3}, {-5, -3, -2, 0}};
}
Winner w4() {
    Winner w(4);
    const int t[12][4] = {{1, 2, 1, 1}, {1, 3, 1, 3}, {1, 4, 4, 1}, {2, 1, 2, 1},
                          {2, 3, 2, 3}, {2, 4, 4, 2}, {3, 1, 1, 3}, {3, 2, 2, 2},
                          {3, 4, 4, 3}, {4, 1, 2, 3}, {4, 2, 2, 4}, {4, 3, 4, 3}};
    for (const auto& e : t) w.set(e[0] - 1, e[1] - 1, {e[2] - 1, e[3] - 1});
    return w;
}

// 3x3 running example with its bar matrices and tight system.
TropMatrix b3() { return {{0, -3, -1}, {-4, 0, -6}, {-5, 0, 0}}; }
TropMatrix b3_under() { return {{0, -3, -3}, {-5, 0, -6}, {-5, -2, 0}}; }
TropMatrix b3_over() { return {{0, -1, -1}, {-4, 0, -5}, {-4, 0, 0}}; }
TropMatrix h7() {
    return {{0, 0, o, o, o, -1, -3},  {-6, 0, o, -3, o, o, -1}, {o, o, 0, -5, -6, o, -4},
            {o, -4, -1, 0, o, o, -6}, {o, o, 0, o, 0, -4, -5},  {-5, o, o, o, -3, 0, 0},
            {0, 0, 0, 0, 0, 0, 0}};
}
TropMatrix h7_star() {
    return {{0, 0, -1, -1, -1, -1, -1},      {-1, 0, -1, -1, -1, -1, -1},
            {-4, -4, 0, -4, -4, -4, -4},     {-5, -4, -1, 0, -5, -5, -5},
            {-4, -4, 0, -4, 0, -4, -4},      {0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0}};
}

// Bar-interval members that fail to commute with b3.
TropMatrix box_x() { return {{0, -2, -2}, {-4, 0, -5}, {-4, 0, 0}}; }
TropMatrix box_xb() { return {{0, -2, -1}, {-4, 0, -5}, {-4, 0, 0}}; }
TropMatrix star_x() { return {{0, -1, -1}, {0, 0, -1}, {-1, 0, 0}}; }
TropMatrix star_xprod() { return {{0, -1, -1}, {0, 0, -1}, {0, 0, 0}}; }

// Cyclic perturbation family at p = (4,3,5).
TropMatrix p_eps2() { return {{0, -2, -5}, {-4, 0, -2}, {-2, -3, 0}}; }
TropMatrix p_eps1() { return {{0, -1, -5}, {-4, 0, -1}, {-1, -3, 0}}; }
TropMatrix p_eps0() { return {{0, 0, -5}, {-4, 0, 0}, {0, -3, 0}}; }
TropMatrix p_prod() { return {{0, -1, -3}, {-3, 0, -1}, {-1, -3, 0}}; }

// Ordered pair whose spans are not nested.
TropMatrix ult_a() { return {{0, -1, -3}, {0, 0, -4}, {0, 0, 0}}; }
TropMatrix ult_b() { return {{0, -1, -2}, {0, 0, -4}, {0, 0, 0}}; }
TropMatrix ult_ab() { return {{0, -1, -2}, {0, 0, -2}, {0, 0, 0}}; }
TropMatrix ult_ba() { return {{0, -1, -2}, {0, 0, -3}, {0, 0, 0}}; }

std::string diff(const std::string& label, const TropMatrix& got, const TropMatrix& want) {
    if (got == want) return "";
    return label + " mismatch; got\n" + format_matrix(got) + "want\n" + format_matrix(want);
}

std::string require(bool cond, const std::string& label) { return cond ? "" : label; }

std::vector<ExtReal> offdiag_vector(const TropMatrix& x) {
    std::vector<ExtReal> v;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (i != j) v.push_back(x.at(i, j));
    return v;
}

} // namespace

std::vector<SuiteCheck> run_reference_suite() {
    std::vector<SuiteCheck> out;
    const auto check = [&](const std::string& name, const std::function<std::string()>& fn) {
        SuiteCheck c{name, false, ""};
        try {
            c.detail = fn();
            c.pass = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    };

    check("powers-chain-4x4", [] {
        const TropMatrix a = a4();
        TropMatrix prev = identity(4);
        for (int k = 1; k <= 3; ++k) {
            const TropMatrix cur = mat_pow(a, k);
            if (!mat_le(prev, cur)) return "power chain not monotone at k=" + std::to_string(k);
            prev = cur;
        }
        std::string r = diff("A^3 vs A^4", mat_pow(a, 3), mat_pow(a, 4));
        if (!r.empty()) return r;
        return diff("A^3 vs A*", mat_pow(a, 3), kleene_star(a));
    });

    check("commuting-pair-4x4", [] {
        const CommutationReport r = commutes(a4(), b4());
        if (!r.commutes) return std::string("pair reported non-commuting");
        return diff("product", *r.product, ab4());
    });

    check("witness-4x4", [] {
        const WitnessSet ws = witness_winners(a4(), b4());
        return require(ws.contains(w4()), "reference winner not among the witnesses");
    });

    check("forced-entries-4x4", [] {
        const auto tight = tighten(omega_w_system(a4(), w4()));
        if (!tight) return std::string("cell unexpectedly empty");
        const Relabeling lab = Relabeling::row_major(4);
        const int x12 = lab.index(0, 1), x32 = lab.index(2, 1);
        const int x21 = lab.index(1, 0), x43 = lab.index(3, 2);
        const int aff = tight->affine();
        std::string r;
        r = require(tight->lower(x12, aff) == ExtReal(-4) && tight->lower(aff, x12) == ExtReal(4),
                    "x_12 = -4 not forced");
        if (!r.empty()) return r;
        r = require(tight->lower(x32, aff) == ExtReal(-6) && tight->lower(aff, x32) == ExtReal(6),
                    "x_32 = -6 not forced");
        if (!r.empty()) return r;
        return require(tight->lower(x21, x43) == ExtReal(0) && tight->lower(x43, x21) == ExtReal(0),
                       "x_21 = x_43 not forced");
    });

    check("dim-bound-9", [] {
        return require(omega_w_dim_bound(w4()) == 9, "expected dimension bound 9");
    });

    check("mutual-pointer-empty", [] {
        Winner tau = Winner::identity_map(4);
        tau.set(0, 2, {1, 3});
        tau.set(1, 3, {0, 2});
        std::string r = require(omega_w_empty_quick(a4(), tau), "quick emptiness check missed");
        if (!r.empty()) return r;
        return require(!tighten(omega_w_system(a4(), tau)), "cell should be empty");
    });

    check("identity-and-star-cells", [] {
        const TropMatrix a = a4();
        const DiffConstraintSystem tr = omega_w_system(a, Winner::transposition_map(4));
        std::string r = require(tr.contains(offdiag_vector(identity(4))),
                                "identity escapes the transposition cell");
        if (!r.empty()) return r;
        const DiffConstraintSystem id = omega_w_system(a, Winner::identity_map(4));
        r = require(id.contains(offdiag_vector(zero_matrix(4))),
                    "zero matrix escapes the identity cell");
        if (!r.empty()) return r;
        return require(id.contains(offdiag_vector(kleene_star(a))),
                       "A* escapes the identity cell");
    });

    check("underline-3x3", [] { return diff("underline", compute_underline(b3()), b3_under()); });

    check("underline-4x4-fixed", [] { return diff("underline", compute_underline(a4()), a4()); });

    check("upper-system-h", [] {
        return diff("system bounds", upper_set_system(b3()).bounds_matrix(), h7());
    });

    check("tightened-h-star", [] {
        const auto tight = tighten(upper_set_system(b3()));
        if (!tight) return std::string("upper set system unexpectedly empty");
        std::string r = diff("tight bounds", tight->bounds_matrix(), h7_star());
        if (!r.empty()) return r;
        r = diff("H^3 vs tight closure", mat_pow(h7(), 3), h7_star());
        if (!r.empty()) return r;
        return diff("H^3 vs H^4", mat_pow(h7(), 3), mat_pow(h7(), 4));
    });

    check("dim-upper-set-5", [] {
        const auto tight = tighten(upper_set_system(b3()));
        if (!tight) return std::string("upper set system unexpectedly empty");
        return require(polytope_dim(*tight) == 5, "expected dimension 5");
    });

    check("overline-3x3", [] {
        std::string r = diff("overline", compute_overline(b3()), b3_over());
        if (!r.empty()) return r;
        return diff("overline vs star", compute_overline(b3()), kleene_star(b3()));
    });

    check("bars-nesting", [] {
        std::string r = require(bars_check(b3()), "underline <= B <= overline fails for b3");
        if (!r.empty()) return r;
        return require(bars_check(a4()), "underline <= A <= overline fails for a4");
    });

    check("underline-idempotent", [] {
        const TropMatrix u = compute_underline(b3());
        return diff("U^2 vs U", mat_mul(u, u), u);
    });

    check("bar-interval-not-sufficient", [] {
        const TropMatrix b = b3(), x = box_x();
        std::string r = require(mat_le(b3_under(), x) && mat_le(x, b3_over()),
                                "X not inside [underline, overline]");
        if (!r.empty()) return r;
        r = diff("BX", mat_mul(b, x), b3_over());
        if (!r.empty()) return r;
        r = diff("XB", mat_mul(x, b), box_xb());
        if (!r.empty()) return r;
        return require(mat_mul(b, x) != mat_mul(x, b), "pair unexpectedly commutes");
    });

    check("star-interval-not-sufficient", [] {
        const TropMatrix b = b3(), x = star_x();
        std::string r = require(mat_le(kleene_star(b), x) && mat_le(x, zero_matrix(3)),
                                "X not inside [B*, 0]");
        if (!r.empty()) return r;
        r = diff("XB", mat_mul(x, b), x);
        if (!r.empty()) return r;
        r = diff("BX", mat_mul(b, x), star_xprod());
        if (!r.empty()) return r;
        return require(mat_mul(b, x) != mat_mul(x, b), "pair unexpectedly commutes");
    });

    check("max-pair-4x4", [] {
        const TropMatrix a = a4(), b = b4(), m = mat_add(a, b), ab = ab4();
        std::string r = diff("M^2 vs AB", mat_mul(m, m), ab);
        if (!r.empty()) return r;
        r = require(m != ab, "M should differ from AB");
        if (!r.empty()) return r;
        int differing = 0, di = -1, dj = -1;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (m.at(i, j) != ab.at(i, j)) { ++differing; di = i; dj = j; }
        r = require(differing == 1 && di == 3 && dj == 0, "M and AB should differ at (4,1) only");
        if (!r.empty()) return r;
        r = diff("A idempotent", mat_mul(a, a), a);
        if (!r.empty()) return r;
        r = diff("B idempotent", mat_mul(b, b), b);
        if (!r.empty()) return r;
        r = diff("AB idempotent", mat_mul(ab, ab), ab);
        if (!r.empty()) return r;
        return require(mat_mul(m, m) != m, "M should not be idempotent");
    });

    check("box-pair-commutes", [] {
        const auto [a, b] = make_box_pair(-3, 4, 20260814u);
        const TropMatrix m = mat_add(a, b);
        std::string r = require(max_product_criterion(a, b), "box pair fails the max criterion");
        if (!r.empty()) return r;
        r = diff("AB vs M", mat_mul(a, b), m);
        if (!r.empty()) return r;
        r = diff("BA vs M", mat_mul(b, a), m);
        if (!r.empty()) return r;
        r = diff("A idempotent", mat_mul(a, a), a);
        if (!r.empty()) return r;
        return diff("M idempotent", mat_mul(m, m), m);
    });

    check("p-family", [] {
        const std::vector<Rational> p = {4, 3, 5};
        std::string r = diff("P(-p,-2)", make_p(p, 2), p_eps2());
        if (!r.empty()) return r;
        r = diff("P(-p,-1)", make_p(p, 1), p_eps1());
        if (!r.empty()) return r;
        return diff("P(-p,0)", make_p(p, 0), p_eps0());
    });

    check("pq-theorem-345", [] {
        const PqReport r = check_pq_theorem({{4, 3, 5}, 2, 1});
        if (r.skipped) return std::string("hypothesis unexpectedly violated");
        if (!r.p_clause_pass) return std::string("P clause failed");
        if (r.q_clause_applicable) return std::string("Q clause should not apply at n=3");
        std::string s = diff("product", r.p_product, p_prod());
        if (!s.empty()) return s;
        return diff("product vs P(-(3,3,3),-1)", r.p_product, make_p({3, 3, 3}, 1));
    });

    check("a0-normalization", [] {
        const TropMatrix a0 = {{2, 1, -5}, {-2, 3, -2}, {0, 0, 0}};
        const TropMatrix p00 = {{0, 3, -5}, {-4, 3, 0}, {0, 0, 0}};
        const TropMatrix b0 = {{1, 2, -5}, {-3, 3, -1}, {0, 0, 0}};
        const TropMatrix c0 = {{1, 2, -3}, {-2, 3, -1}, {0, 0, 0}};
        std::string r = diff("A0", normalize_a0(p_eps2()), a0);
        if (!r.empty()) return r;
        r = diff("P(-p,0)0", normalize_a0(p_eps0()), p00);
        if (!r.empty()) return r;
        r = diff("B0", normalize_a0(p_eps1()), b0);
        if (!r.empty()) return r;
        return diff("C0", normalize_a0(p_prod()), c0);
    });

    check("b3-zero-forms", [] {
        const TropMatrix b0 = {{5, -3, -1}, {1, 0, -6}, {0, 0, 0}};
        const TropMatrix u0 = {{5, -1, -3}, {0, 2, -6}, {0, 0, 0}};
        const TropMatrix o0 = {{4, -1, -1}, {0, 0, -5}, {0, 0, 0}};
        std::string r = diff("B0", normalize_a0(b3()), b0);
        if (!r.empty()) return r;
        r = diff("underline(B)0", normalize_a0(compute_underline(b3())), u0);
        if (!r.empty()) return r;
        return diff("overline(B)0", normalize_a0(compute_overline(b3())), o0);
    });

    check("section-3x3", [] {
        const SpanSection s = section_complex(b3());
        const std::array<Point2, 3> gens = {Point2{5, 1}, Point2{-3, 0}, Point2{-1, -6}};
        if (!(s.generators == gens)) return std::string("generators mismatch");
        int two = 0, one = 0;
        for (const SectionCell& c : s.cells) {
            if (c.dim == 2) ++two;
            if (c.dim == 1) ++one;
        }
        std::string r = require(two == 1 && one == 3 && s.cells.size() == 4,
                                "expected one 2-cell and three dangling 1-cells");
        if (!r.empty()) return r;
        const std::vector<Point2> soma = {{-1, -5}, {4, 0}, {-1, 0}};
        return require(s.cells[0].vertices == soma, "2-cell is not the expected triangle");
    });

    check("sector-3x3", [] {
        return require(sector_check(b3()), "columns of B0 escape their sectors");
    });

    check("span-nesting-3x3", [] {
        const TropMatrix u = compute_underline(b3()), b = b3(), v = compute_overline(b3());
        std::string r = require(span_contains(u, b).contained, "span(underline) misses span(B)");
        if (!r.empty()) return r;
        return require(span_contains(b, v).contained, "span(B) misses span(overline)");
    });

    check("star-section-is-2-cell", [] {
        const SpanSection s = section_complex(compute_overline(b3()));
        std::string r = require(s.cells.size() == 1 && s.cells[0].dim == 2,
                                "star section should be one 2-cell");
        if (!r.empty()) return r;
        const std::vector<Point2> soma = {{-1, -5}, {4, 0}, {-1, 0}};
        return require(s.cells[0].vertices == soma, "star section is not the expected triangle");
    });

    check("span-not-nested", [] {
        const TropMatrix a = ult_a(), b = ult_b();
        std::string r = require(mat_le(a, b), "expected A <= B");
        if (!r.empty()) return r;
        r = diff("AB", mat_mul(a, b), ult_ab());
        if (!r.empty()) return r;
        r = diff("BA", mat_mul(b, a), ult_ba());
        if (!r.empty()) return r;
        const SpanContainment sc = span_contains(a, b);
        r = require(!sc.contained, "span(A) should not contain span(B)");
        if (!r.empty()) return r;
        return require(sc.failing_column == 2, "expected the third column to fail");
    });

    return out;
}

} // namespace tropcomm
