#include "tropcomm/sampling.hpp"

namespace tropcomm {

Rational uniform_rational(SplitMix64& rng, const Rational& lo, const Rational& hi, long den) {
    if (hi < lo) throw DomainError("uniform_rational: empty interval");
    // Steps of 1/den from lo, clamped into [lo, hi].
    Rational scaled = (hi - lo) * den;
    BigInt steps = numerator(scaled) / denominator(scaled); // floor, scaled >= 0
    std::uint64_t nsteps = steps.convert_to<std::uint64_t>();
    std::uint64_t pick = rng.below(nsteps + 1);
    Rational r = lo + Rational(pick, static_cast<unsigned long>(den));
    return r > hi ? hi : r;
}

ExtReal sample_in_interval(SplitMix64& rng, const ExtReal& lo, const ExtReal& hi) {
    if (hi.is_bottom()) {
        if (!lo.is_bottom()) throw DomainError("sample_in_interval: empty interval");
        return ExtReal::bottom();
    }
    if (lo.is_bottom()) {
        if (rng.below(8) == 0) return ExtReal::bottom();
        return ExtReal(uniform_rational(rng, hi.value() - 4, hi.value()));
    }
    return ExtReal(uniform_rational(rng, lo.value(), hi.value()));
}

TropMatrix sample_matrix_in_box(SplitMix64& rng, const TropMatrix& lower,
                                const TropMatrix& upper) {
    if (lower.rows() != upper.rows() || lower.cols() != upper.cols())
        throw DimensionMismatch("sample_matrix_in_box: box corners differ in shape");
    if (!mat_le(lower, upper)) throw DomainError("sample_matrix_in_box: empty box");
    TropMatrix m(lower.rows(), lower.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = sample_in_interval(rng, lower.at(i, j), upper.at(i, j));
    return m;
}

TropMatrix random_normal_matrix(SplitMix64& rng, int n) {
    TropMatrix m = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (rng.below(8)) {
                case 0: m.at(i, j) = ExtReal::bottom(); break;
                case 1: m.at(i, j) = ExtReal(0); break;
                default: m.at(i, j) = ExtReal(uniform_rational(rng, -6, 0));
            }
        }
    return m;
}

TropMatrix random_real_normal_matrix(SplitMix64& rng, int n, const Rational& min_entry) {
    TropMatrix m = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = ExtReal(uniform_rational(rng, min_entry, 0));
    return m;
}

} // namespace tropcomm
