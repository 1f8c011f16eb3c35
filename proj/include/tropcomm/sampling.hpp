#pragma once

#include <cstdint>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

// splitmix64: tiny pinned-output generator, so seeded runs are identical on
// every platform (stdlib distributions do not promise that).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); modulo bias is irrelevant at test scale.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

inline constexpr long kSampleDenominator = 256;

// Uniform over the grid {lo, lo + 1/den, ..., hi}. Requires lo <= hi.
Rational uniform_rational(SplitMix64& rng, const Rational& lo, const Rational& hi,
                          long den = kSampleDenominator);

// Draw from [lo, hi] where lo may be -inf: then with small probability the
// result is -inf, otherwise a value from a finite window below hi.
ExtReal sample_in_interval(SplitMix64& rng, const ExtReal& lo, const ExtReal& hi);

// Entrywise draw between two matrices with lower <= upper.
TropMatrix sample_matrix_in_box(SplitMix64& rng, const TropMatrix& lower,
                                const TropMatrix& upper);

// Random normal matrix of order n; off-diagonal entries mix -inf, 0 and
// negative rationals so border cases get exercised.
TropMatrix random_normal_matrix(SplitMix64& rng, int n);

// Random normal matrix with all entries finite, off-diagonal in [min_entry, 0].
TropMatrix random_real_normal_matrix(SplitMix64& rng, int n, const Rational& min_entry = -6);

} // namespace tropcomm
