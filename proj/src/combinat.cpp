#include "cutjoin/combinat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutjoin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = 0;
    for (int p : parts_) weight_ += p;
}

std::vector<std::pair<int, int>> Partition::exponents() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string Partition::exponent_notation() const {
    std::string s;
    for (const auto& [part, mult] : exponents()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(part);
        if (mult > 1) s += '^' + std::to_string(mult);
    }
    return s;
}

std::string Partition::tuple_notation() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition make_partition(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("partition needs at least one part");
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    return Partition(std::move(parts));
}

Int class_size(const Partition& lambda, int n) {
    if (lambda.weight() != n)
        throw std::invalid_argument("class_size: partition weight does not match n");
    Int z = 1;
    for (const auto& [part, mult] : lambda.exponents()) {
        for (int l = 1; l <= mult; ++l) z *= Int(part) * l;
    }
    return factorial(n) / z;
}

Int count_d_cycles(int n, int d) {
    if (d > n) return 0;
    return binomial(n, d) * factorial(d) / d;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace cutjoin
