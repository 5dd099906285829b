#pragma once

#include <vector>

#include "cutjoin/permgroup.hpp"
#include "cutjoin/psymring.hpp"

namespace cutjoin {

/// One of the realizations of the W-operator action on C[p1,p2,...].
///
/// CutAndJoinClosedForm: the classical second-order cut-and-join operator.
/// DeltaD(d):            the sum over S_d of phat/dhat pairs, with the
///                       reversal cycle (d ... 2 1) as the twist.
/// DeltaBeta(beta):      same with an arbitrary d-cycle beta as the twist.
/// GroupRoute(d):        left multiplication by the d-cycle class sum,
///                       transported through phi.
struct OperatorSpec {
    enum class Kind { CutAndJoinClosedForm, DeltaD, DeltaBeta, GroupRoute };

    Kind kind = Kind::DeltaD;
    int d = 2;
    Permutation beta;  // single d-cycle in S_d; meaningful for DeltaBeta only

    static OperatorSpec cut_and_join();
    static OperatorSpec delta(int d);
    static OperatorSpec delta_beta(const Permutation& beta);
    static OperatorSpec group_route(int d);
};

// The monomial with one factor p_{sum of a_j over j in the cycle} per cycle
// of delta; fixed points contribute p_{a_j}.
PMonomial phat(const Permutation& delta, const std::vector<int>& a);

// Applies prod over cycles of (sum a_j) d/dp_{sum a_j} to m. Repeated
// targets differentiate honestly (falling factorials on the exponents).
PPolynomial dhat_apply(const Permutation& delta, const std::vector<int>& a,
                       const PMonomial& m);

// beta * delta for a single d-cycle beta.
Permutation phi_beta_map(const Permutation& beta, const Permutation& delta);

// The reversal d-cycle (d d-1 ... 2 1).
Permutation reversal_cycle(int d);

// Applies the operator; every realization preserves the weight grading and
// that is checked on every application.
PPolynomial apply_operator(const OperatorSpec& op, const PPolynomial& f);

// Delta_{d1}(Delta_{d2} f) - Delta_{d2}(Delta_{d1} f).
PPolynomial commutator(int d1, int d2, const PPolynomial& f);

}  // namespace cutjoin
