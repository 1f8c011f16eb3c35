#include "tropcomm/relabeling.hpp"

namespace tropcomm {

Relabeling::Relabeling(int n, std::vector<std::pair<int, int>> order)
    : n_(n), order_(std::move(order)), index_(static_cast<std::size_t>(n) * n, -1) {
    if (order_.size() != static_cast<std::size_t>(n) * n - n)
        throw DomainError("Relabeling: order must list every off-diagonal position once");
    for (std::size_t v = 0; v < order_.size(); ++v) {
        auto [i, j] = order_[v];
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw DomainError("Relabeling: position out of range");
        int& slot = index_[static_cast<std::size_t>(i) * n + j];
        if (slot != -1) throw DomainError("Relabeling: duplicate position");
        slot = static_cast<int>(v);
    }
}

Relabeling Relabeling::row_major(int n) {
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) order.emplace_back(i, j);
    return Relabeling(n, std::move(order));
}

Relabeling Relabeling::from_order(int n, std::vector<std::pair<int, int>> order) {
    return Relabeling(n, std::move(order));
}

int Relabeling::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw DomainError("Relabeling::index: off-diagonal position expected");
    return index_[static_cast<std::size_t>(i) * n_ + j];
}

std::string Relabeling::var_name(int var) const {
    auto [i, j] = position(var);
    if (n_ <= 9) return "x_" + std::to_string(i + 1) + std::to_string(j + 1);
    return "x_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

} // namespace tropcomm
