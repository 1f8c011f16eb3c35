#include "tropcomm/winner.hpp"

namespace tropcomm {

namespace {

std::size_t slot(int n, int i, int j) { return static_cast<std::size_t>(i) * n + j; }

void require_offdiag(int n, int i, int j, const char* who) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw DomainError(std::string(who) + ": position must be off-diagonal and in range");
}

} // namespace

Winner::Winner(int n) : n_(n), w_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw DomainError("Winner: order must be positive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w_[slot(n, i, j)] = {i, j};
}

Winner Winner::identity_map(int n) { return Winner(n); }

Winner Winner::transposition_map(int n) {
    Winner w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) w.set(i, j, {j, i});
    return w;
}

std::pair<int, int> Winner::at(int i, int j) const {
    require_offdiag(n_, i, j, "Winner::at");
    return w_[slot(n_, i, j)];
}

void Winner::set(int i, int j, std::pair<int, int> w) {
    require_offdiag(n_, i, j, "Winner::set");
    if (w.first < 0 || w.second < 0 || w.first >= n_ || w.second >= n_)
        throw DomainError("Winner::set: image out of range");
    w_[slot(n_, i, j)] = w;
}

WitnessSet::WitnessSet(int n, std::vector<std::vector<std::pair<int, int>>> pairs)
    : n_(n), commuting_(true), pairs_(std::move(pairs)) {
    if (pairs_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionMismatch("WitnessSet: wrong slot count");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && pairs_[slot(n, i, j)].empty()) commuting_ = false;
}

const std::vector<std::pair<int, int>>& WitnessSet::at(int i, int j) const {
    require_offdiag(n_, i, j, "WitnessSet::at");
    return pairs_[slot(n_, i, j)];
}

bool WitnessSet::contains(const Winner& w) const {
    if (empty() || w.order() != n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            const auto& options = pairs_[slot(n_, i, j)];
            bool found = false;
            for (const auto& p : options)
                if (p == w.at(i, j)) { found = true; break; }
            if (!found) return false;
        }
    return true;
}

BigInt WitnessSet::count() const {
    if (empty()) return 0;
    BigInt total = 1;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) total *= static_cast<unsigned>(pairs_[slot(n_, i, j)].size());
    return total;
}

Winner WitnessSet::first() const {
    if (empty()) throw DomainError("WitnessSet::first: no witnesses");
    Winner w(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) w.set(i, j, pairs_[slot(n_, i, j)].front());
    return w;
}

std::optional<std::vector<Winner>> WitnessSet::expand(std::size_t cap) const {
    if (empty()) return std::vector<Winner>{};
    if (count() > cap) return std::nullopt;

    std::vector<Winner> out;
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) positions.emplace_back(i, j);
    if (positions.empty()) return std::vector<Winner>{Winner(n_)};

    std::vector<std::size_t> choice(positions.size(), 0);
    for (;;) {
        Winner w(n_);
        for (std::size_t k = 0; k < positions.size(); ++k) {
            auto [i, j] = positions[k];
            w.set(i, j, pairs_[slot(n_, i, j)][choice[k]]);
        }
        out.push_back(w);
        std::size_t k = positions.size();
        while (k > 0) {
            --k;
            auto [i, j] = positions[k];
            if (++choice[k] < pairs_[slot(n_, i, j)].size()) break;
            choice[k] = 0;
            if (k == 0) return out;
        }
    }
}

} // namespace tropcomm
