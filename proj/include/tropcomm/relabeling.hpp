#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropcomm/errors.hpp"

namespace tropcomm {

// Bijection between the off-diagonal positions of an order-n matrix and
// 0..n^2-n-1, used to name the variables x_ij of a constraint system.
class Relabeling {
public:
    static Relabeling row_major(int n);
    static Relabeling from_order(int n, std::vector<std::pair<int, int>> order);

    int order() const { return n_; }
    int size() const { return static_cast<int>(order_.size()); } // n^2 - n

    std::pair<int, int> position(int var) const { return order_[static_cast<std::size_t>(var)]; }
    int index(int i, int j) const;
    std::string var_name(int var) const; // "x_12" style, 1-based

private:
    Relabeling(int n, std::vector<std::pair<int, int>> order);
    int n_;
    std::vector<std::pair<int, int>> order_;
    std::vector<int> index_; // n*n -> var or -1
};

} // namespace tropcomm
