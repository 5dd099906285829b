#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// enumeration shortcuts: everything here filters the full symmetric group.

#include <map>
#include <vector>

#include "cutjoin/combinat.hpp"
#include "cutjoin/hurwitz.hpp"
#include "cutjoin/permgroup.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin::testing {

// Conjugacy class sizes of S_n by enumerating all n! elements.
inline std::map<Partition, Int> brute_class_counts(int n) {
    std::map<Partition, Int> counts;
    for_each_permutation(n, [&](const Permutation& g) { ++counts[cycle_type(g)]; });
    return counts;
}

// All elements of a class, by filtering S_n.
inline std::vector<Permutation> brute_class_elements(const Partition& lambda, int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& g) {
        if (cycle_type(g) == lambda) out.push_back(g);
    });
    return out;
}

// Cov by enumerating every factor over its full class, the last included:
// no solve-for-last shortcut, so this is independent of cov_bruteforce.
inline Int cov_full_enumeration(int n, const std::vector<Partition>& types,
                                bool require_transitive = true) {
    Int count = 0;
    std::vector<Permutation> chosen;
    std::function<void()> rec = [&] {
        if (chosen.size() == types.size()) {
            Permutation prod = Permutation::identity(n);
            for (const auto& s : chosen) prod = prod * s;
            if (!prod.is_identity()) return;
            if (require_transitive && !is_transitive(chosen, n)) return;
            ++count;
            return;
        }
        for_each_of_type(types[chosen.size()], n, [&](const Permutation& s) {
            chosen.push_back(s);
            rec();
            chosen.pop_back();
        });
    };
    rec();
    return count;
}

}  // namespace cutjoin::testing
