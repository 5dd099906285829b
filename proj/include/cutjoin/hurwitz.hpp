#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cutjoin/combinat.hpp"
#include "cutjoin/psymring.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

/// A Hurwitz counting query: k branch points of cycle type (d,1^{n-d})
/// plus one of type alpha, monodromy product equal to the identity,
/// with or without the transitivity requirement.
struct HurwitzQuery {
    int n = 1;
    int d = 2;
    int k = 0;
    Partition alpha;
    bool connected = true;
};

// Number of tuples (sigma_1..sigma_k), sigma_i of type types[i], product the
// identity, generated subgroup transitive. Iterates the first k-1 classes
// and solves the last factor from the monodromy condition.
Int cov_bruteforce(int n, const std::vector<Partition>& types);

Int hurwitz_number(const HurwitzQuery& q);

/// For fixed (n, d, k): counts of k-tuples of d-cycles keyed by the cycle
/// type of the solved last factor; .first requires transitivity of the full
/// (k+1)-tuple, .second does not.
using MonodromyTally = std::map<Partition, std::pair<Int, Int>>;

MonodromyTally dcycle_monodromy_tally(int n, int d, int k);

// Sum over k of z^k/k! Delta_d^k(e^{p1}), truncated: the W-flow solution of
// dH/dz = W([d]) H with H(0,p) = e^{p1}.
ZSeries build_hhat_series(int d, int w_max, int k_max);

// The same series assembled from brute-force disconnected counts:
// 1 + sum over n,k,alpha of hhat_k(alpha)/(n! k!) z^k p_alpha.
ZSeries brute_hhat_series(int d, int w_max, int k_max);

// Connected generating series from brute-force transitive counts.
ZSeries brute_h_series(int d, int w_max, int k_max);

// log of the disconnected series; coefficients carry the connected counts.
ZSeries connected_from_log(const ZSeries& s);

struct VerifyReport {
    bool pass = false;
    std::string detail;
};

// The one-step recursion with disconnected counts:
// sum_alpha hhat_k(alpha) p_alpha == sum_alpha' hhat_{k-1}(alpha') Phi(K_{1^{n-d}d} alpha').
VerifyReport verify_recursion(int n, int d, int k);

// Same statement with connected counts; fails in general (removing a d-cycle
// does not preserve transitivity), e.g. at n=3, d=2, k=2.
VerifyReport verify_recursion_connected(int n, int d, int k);

// Checks: flow series == brute-force series; d/dz of the brute-force series
// equals Delta_d applied to it up to (k_max-1, w_max); level 0 is e^{p1}.
VerifyReport verify_pde(int d, int w_max, int k_max);

}  // namespace cutjoin
