#include "tropcomm/constraint_system.hpp"

#include <numeric>

#include "tropcomm/sampling.hpp"

namespace tropcomm {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("y_" + std::to_string(i + 1));
    return names;
}

} // namespace

DiffConstraintSystem::DiffConstraintSystem(std::vector<std::string> names)
    : names_(std::move(names)), lb_(nvars() + 1, nvars() + 1) {
    for (int i = 0; i <= nvars(); ++i) lb_.at(i, i) = ExtReal(0);
}

DiffConstraintSystem::DiffConstraintSystem(const TropMatrix& bounds,
                                           std::vector<std::string> names)
    : names_(std::move(names)), lb_(bounds) {
    if (!bounds.is_square() || bounds.rows() != nvars() + 1)
        throw DimensionMismatch("DiffConstraintSystem: bounds must be (nvars+1) square");
    for (int i = 0; i <= nvars(); ++i)
        if (bounds.at(i, i) != ExtReal(0))
            throw DomainError("DiffConstraintSystem: diagonal must be zero");
}

DiffConstraintSystem DiffConstraintSystem::from_bounds_matrix(const TropMatrix& bounds,
                                                              std::vector<std::string> names) {
    if (names.empty() && bounds.rows() > 0) names = default_names(bounds.rows() - 1);
    return DiffConstraintSystem(bounds, std::move(names));
}

void DiffConstraintSystem::bound_diff_below(int i, int k, const ExtReal& lo) {
    if (i < 0 || k < 0 || i > nvars() || k > nvars() || i == k)
        throw DomainError("bound_diff_below: bad variable indices");
    lb_.at(i, k) = t_add(lb_.at(i, k), lo);
}

void DiffConstraintSystem::bound_diff_above(int i, int k, const Rational& hi) {
    bound_diff_below(k, i, ExtReal(-hi));
}

void DiffConstraintSystem::bound_below(int var, const ExtReal& lo) {
    bound_diff_below(var, affine(), lo);
}

void DiffConstraintSystem::bound_above(int var, const Rational& hi) {
    bound_diff_below(affine(), var, ExtReal(-hi));
}

void DiffConstraintSystem::fix(int var, const Rational& v) {
    bound_below(var, ExtReal(v));
    bound_above(var, v);
}

void DiffConstraintSystem::fix_diff(int i, int k, const Rational& v) {
    bound_diff_below(i, k, ExtReal(v));
    bound_diff_above(i, k, v);
}

bool DiffConstraintSystem::contains(const std::vector<ExtReal>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw DimensionMismatch("contains: point has wrong arity");
    auto coord = [&](int i) { return i == affine() ? ExtReal(0) : point[i]; };
    for (int i = 0; i <= nvars(); ++i)
        for (int k = 0; k <= nvars(); ++k) {
            if (i == k) continue;
            if (!(t_mul(lb_.at(i, k), coord(k)) <= coord(i))) return false;
        }
    return true;
}

std::optional<DiffConstraintSystem> tighten(const DiffConstraintSystem& s) {
    TropMatrix h = s.bounds_matrix();
    int m = h.rows();
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (h.at(i, k).is_bottom()) continue;
            for (int j = 0; j < m; ++j)
                h.at(i, j) = t_add(h.at(i, j), t_mul(h.at(i, k), h.at(k, j)));
        }
        for (int i = 0; i < m; ++i)
            if (h.at(i, i) > ExtReal(0)) return std::nullopt; // positive cycle
    }
    return DiffConstraintSystem(h, s.var_names());
}

bool is_empty(const DiffConstraintSystem& s) { return !tighten(s).has_value(); }

bool is_tight(const DiffConstraintSystem& s) {
    auto t = tighten(s);
    return t.has_value() && *t == s;
}

std::optional<std::vector<ExtReal>> sample_point(const DiffConstraintSystem& s,
                                                 std::uint64_t seed) {
    auto tight = tighten(s);
    if (!tight) return std::nullopt;
    const TropMatrix& h = tight->bounds_matrix();
    int n = tight->nvars(), aff = tight->affine();

    SplitMix64 rng(seed);
    std::vector<ExtReal> val(static_cast<std::size_t>(n) + 1);
    val[static_cast<std::size_t>(aff)] = ExtReal(0);
    std::vector<bool> assigned(static_cast<std::size_t>(n) + 1, false);
    assigned[static_cast<std::size_t>(aff)] = true;

    for (int i = 0; i < n; ++i) {
        ExtReal lo; // -inf until a finite bound shows up
        bool has_hi = false;
        Rational hi;
        for (int j = 0; j <= n; ++j) {
            if (!assigned[static_cast<std::size_t>(j)]) continue;
            lo = t_add(lo, t_mul(h.at(i, j), val[static_cast<std::size_t>(j)]));
            // h(j,i) + y_i <= y_j caps y_i when both are finite.
            if (!h.at(j, i).is_bottom() && val[static_cast<std::size_t>(j)].is_finite()) {
                Rational cap = val[static_cast<std::size_t>(j)].value() - h.at(j, i).value();
                if (!has_hi || cap < hi) { has_hi = true; hi = cap; }
            }
        }
        Rational chosen;
        if (lo.is_bottom()) {
            Rational top = has_hi ? hi : Rational(0);
            chosen = uniform_rational(rng, top - 4, top);
        } else if (!has_hi) {
            chosen = uniform_rational(rng, lo.value(), lo.value() + 4);
        } else {
            // Closure makes the running interval nonempty; guaranteed by the
            // triangle inequality through already-assigned nodes.
            chosen = uniform_rational(rng, lo.value(), hi);
        }
        val[static_cast<std::size_t>(i)] = ExtReal(chosen);
        assigned[static_cast<std::size_t>(i)] = true;
    }
    val.resize(static_cast<std::size_t>(n));
    return val;
}

int polytope_dim(const DiffConstraintSystem& tight) {
    if (!is_tight(tight)) throw DomainError("polytope_dim: system must be tightened first");
    int m = tight.nvars() + 1;
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    const TropMatrix& h = tight.bounds_matrix();
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k) {
            // A zero-weight two-cycle pins y_i - y_k to the constant h(i,k).
            if (h.at(i, k).is_bottom() || h.at(k, i).is_bottom()) continue;
            const Rational cycle = h.at(i, k).value() + h.at(k, i).value();
            if (cycle == 0) parent[static_cast<std::size_t>(find(i))] = find(k);
        }
    int components = 0;
    for (int i = 0; i < m; ++i)
        if (find(i) == i) ++components;
    return components - 1;
}

} // namespace tropcomm
