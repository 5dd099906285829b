#pragma once

#include <string>
#include <vector>

namespace cutjoin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing; first counterexample otherwise
};

struct SuiteResult {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Default bounds are the acceptance bounds; threads <= 0 means all cores.

// Main theorem Delta_d(p_lambda) == Phi(K_{1^{n-d}d} g_lambda) for every
// lambda of weight <= n_max, 2 <= d <= d_max; plus the closed-form
// cut-and-join identity up to cutjoin_w_max.
SuiteResult suite_theorem_w(int n_max = 8, int d_max = 4, int cutjoin_w_max = 10,
                            int threads = 0);

// Delta_beta == Delta_d for every d-cycle beta, d <= d_max, weights <= w_max.
SuiteResult suite_beta(int d_max = 4, int w_max = 8, int threads = 0);

// [Delta_d1, Delta_d2] == 0 for d1,d2 <= d_max, weights <= w_max.
SuiteResult suite_commute(int d_max = 4, int w_max = 8, int threads = 0);

// Matrix realization: substitution intertwining, the per-monomial identity
// over all label tuples, the cycle action on injective labels, and the
// normal-ordering counterexample.
SuiteResult suite_xmatrix(int subst_w_max = 4, int subst_n_max = 4, int d_max = 3,
                          int eq31_n_max = 4, int eq31_label_max = 3, int threads = 0);

// Hurwitz pipeline and the PDE: brute-force/series agreement (disconnected
// and connected), spot values, initial condition, coefficientwise
// d/dz == Delta_d.
SuiteResult suite_pde(int d_max = 3, int w_max = 6, int k_max = 3, int threads = 0);

// The one-step recursion in disconnected form, plus the diagnostic showing
// the connected form failing at (n=3, d=2, k=2).
SuiteResult suite_recursion(int n_max = 6, int d_max = 3, int k_max = 3, int threads = 0);

SuiteResult suite_all(int threads = 0);

}  // namespace cutjoin
