#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cutjoin/rational.hpp"

namespace cutjoin {

/// An integer partition: positive parts stored weakly decreasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }

    // Exponent view: pairs (part value i, multiplicity k_i), parts descending.
    std::vector<std::pair<int, int>> exponents() const;

    // "2 1^2" for (2,1,1); "1^3" for (1,1,1).
    std::string exponent_notation() const;
    // "(2,1,1)"
    std::string tuple_notation() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Validates and sorts; rejects empty input and nonpositive entries.
Partition make_partition(std::vector<int> parts);

// |K_lambda| = n!/z_lambda with z_lambda = prod_i i^{k_i} k_i!.
// Requires weight(lambda) == n.
Int class_size(const Partition& lambda, int n);

// (1/d) C(n,d) d! for d <= n, else 0.
Int count_d_cycles(int n, int d);

// All partitions of n, ordered lexicographically decreasing, e.g.
// n=4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

}  // namespace cutjoin
