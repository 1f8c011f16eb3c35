#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropcomm/ext_real.hpp"

namespace tropcomm {

// Assigns to every off-diagonal position (i,j) a pair (w1,w2) of indices:
// w1 picks the dominating term of (AX)_ij, w2 the dominating term of (XA)_ij.
// Indices are 0-based.
class Winner {
public:
    explicit Winner(int n);

    static Winner identity_map(int n);      // w(i,j) = (i,j)
    static Winner transposition_map(int n); // w(i,j) = (j,i)

    int order() const { return n_; }
    std::pair<int, int> at(int i, int j) const;
    void set(int i, int j, std::pair<int, int> w);

    friend bool operator==(const Winner& a, const Winner& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> w_; // row-major n*n, diagonal slots unused
};

// Per-position argmax pairs of a commuting pair (A, X), kept factored: the
// winners witnessing AX = XA are exactly the per-position choices, so their
// number is the product of the per-position set sizes.
class WitnessSet {
public:
    WitnessSet() : n_(0), commuting_(false) {}
    WitnessSet(int n, std::vector<std::vector<std::pair<int, int>>> pairs);

    bool empty() const { return !commuting_; }
    int order() const { return n_; }

    const std::vector<std::pair<int, int>>& at(int i, int j) const;
    bool contains(const Winner& w) const;
    BigInt count() const;
    Winner first() const; // lexicographically least witness
    // All witnesses, or nullopt when there are more than cap.
    std::optional<std::vector<Winner>> expand(std::size_t cap = 10000) const;

private:
    int n_;
    bool commuting_;
    std::vector<std::vector<std::pair<int, int>>> pairs_; // row-major n*n
};

} // namespace tropcomm
