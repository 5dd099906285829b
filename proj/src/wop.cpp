#include "cutjoin/wop.hpp"

#include <numeric>
#include <stdexcept>

namespace cutjoin {

namespace {

void require_single_cycle(const Permutation& beta) {
    if (beta.cycles().size() != 1)
        throw std::invalid_argument("beta must be a single d-cycle on {1..d}");
}

}  // namespace

OperatorSpec OperatorSpec::cut_and_join() {
    return OperatorSpec{Kind::CutAndJoinClosedForm, 2, {}};
}

OperatorSpec OperatorSpec::delta(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    return OperatorSpec{Kind::DeltaD, d, {}};
}

OperatorSpec OperatorSpec::delta_beta(const Permutation& beta) {
    require_single_cycle(beta);
    return OperatorSpec{Kind::DeltaBeta, beta.degree(), beta};
}

OperatorSpec OperatorSpec::group_route(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    return OperatorSpec{Kind::GroupRoute, d, {}};
}

PMonomial phat(const Permutation& delta, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != delta.degree())
        throw std::invalid_argument("phat: tuple length must equal the degree of delta");
    PMonomial out;
    for (const auto& cyc : delta.cycles()) {
        int sum = 0;
        for (int j : cyc) sum += a[j - 1];
        out = out * PMonomial::p(sum);
    }
    return out;
}

PPolynomial dhat_apply(const Permutation& delta, const std::vector<int>& a,
                       const PMonomial& m) {
    if (static_cast<int>(a.size()) != delta.degree())
        throw std::invalid_argument("dhat_apply: tuple length must equal the degree of delta");
    PMonomial cur = m;
    Rat coeff = 1;
    for (const auto& cyc : delta.cycles()) {
        int sum = 0;
        for (int j : cyc) sum += a[j - 1];
        const int e = cur.exponent_of(sum);
        if (e == 0) return PPolynomial::zero();
        coeff *= Rat(sum) * e;
        cur = cur.divided_by_p(sum);
    }
    return PPolynomial(cur, coeff);
}

Permutation phi_beta_map(const Permutation& beta, const Permutation& delta) {
    require_single_cycle(beta);
    return beta * delta;
}

Permutation reversal_cycle(int d) {
    std::vector<int> cyc(d);
    for (int i = 0; i < d; ++i) cyc[i] = d - i;
    return Permutation::from_cycles(d, {cyc});
}

namespace {

// Analytic route: per monomial, walk delta over S_d; each cycle of delta
// picks a derivative target from the support of the partially
// differentiated monomial, then every composition of that target value into
// positive parts along the cycle contributes phat(beta*delta, a) times the
// derivative remainder.
class DeltaBetaApplier {
public:
    DeltaBetaApplier(const Permutation& beta, const PMonomial& m)
        : beta_(beta), d_(beta.degree()), a_(d_), input_(m) {}

    PPolynomial run() {
        for_each_permutation(d_, [&](const Permutation& delta) {
            delta_cycles_ = delta.cycles();
            phi_delta_ = beta_ * delta;
            assign_cycle(0, input_, 1);
        });
        return std::move(result_);
    }

private:
    void assign_cycle(std::size_t v, const PMonomial& cur, const Rat& coeff) {
        if (v == delta_cycles_.size()) {
            result_.add_term(phat(phi_delta_, a_) * cur, coeff / d_);
            return;
        }
        // Snapshot: iterating while differentiating would invalidate it.
        const auto exps = cur.exponents();
        for (const auto& [target, mult] : exps) {
            const auto& cyc = delta_cycles_[v];
            if (static_cast<int>(cyc.size()) > target) continue;  // no composition exists
            const PMonomial next = cur.divided_by_p(target);
            compose_parts(v, 0, target, next, coeff * Rat(target) * mult);
        }
    }

    // Distributes `left` over the members of cycle v starting at position i.
    void compose_parts(std::size_t v, std::size_t i, int left, const PMonomial& cur,
                       const Rat& coeff) {
        const auto& cyc = delta_cycles_[v];
        const int remaining_slots = static_cast<int>(cyc.size() - i);
        if (remaining_slots == 1) {
            a_[cyc[i] - 1] = left;
            assign_cycle(v + 1, cur, coeff);
            return;
        }
        for (int part = 1; part <= left - (remaining_slots - 1); ++part) {
            a_[cyc[i] - 1] = part;
            compose_parts(v, i + 1, left - part, cur, coeff);
        }
    }

    Permutation beta_;
    int d_;
    std::vector<int> a_;
    PMonomial input_;
    std::vector<std::vector<int>> delta_cycles_;
    Permutation phi_delta_;
    PPolynomial result_;
};

PPolynomial apply_cut_and_join_monomial(const PMonomial& m) {
    PPolynomial out;
    // join: (1/2) i j p_{i+j} d^2/dp_i dp_j
    for (const auto& [i, ei] : m.exponents()) {
        const PMonomial mi = m.divided_by_p(i);
        for (const auto& [j, ej] : mi.exponents()) {
            out.add_term(PMonomial::p(i + j) * mi.divided_by_p(j),
                         Rat(Int(i) * j * ei * ej, 2));
        }
    }
    // cut: (1/2) (i+j) p_i p_j d/dp_{i+j}, summed over ordered pairs i+j=s
    for (const auto& [s, es] : m.exponents()) {
        const PMonomial ms = m.divided_by_p(s);
        for (int i = 1; i < s; ++i)
            out.add_term(PMonomial::p(i) * PMonomial::p(s - i) * ms, Rat(Int(s) * es, 2));
    }
    return out;
}

PPolynomial apply_group_route_monomial(int d, const PMonomial& m) {
    const int n = m.weight();
    if (n < d) return PPolynomial::zero();
    std::vector<int> parts(1, d);
    parts.insert(parts.end(), n - d, 1);
    const Permutation g = canonical_of_type(m.to_partition());
    return phi_linear(multiply_class_left(make_partition(std::move(parts)), g));
}

PPolynomial apply_to_monomial(const OperatorSpec& op, const PMonomial& m) {
    switch (op.kind) {
        case OperatorSpec::Kind::CutAndJoinClosedForm:
            return apply_cut_and_join_monomial(m);
        case OperatorSpec::Kind::DeltaD:
            return DeltaBetaApplier(reversal_cycle(op.d), m).run();
        case OperatorSpec::Kind::DeltaBeta:
            return DeltaBetaApplier(op.beta, m).run();
        case OperatorSpec::Kind::GroupRoute:
            return apply_group_route_monomial(op.d, m);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

PPolynomial apply_operator(const OperatorSpec& op, const PPolynomial& f) {
    PPolynomial out;
    for (const auto& [m, c] : f.terms()) {
        const PPolynomial image = apply_to_monomial(op, m);
        for (const auto& [im, ic] : image.terms()) {
            if (im.weight() != m.weight())
                throw std::logic_error("operator application broke the weight grading");
        }
        out += image * c;
    }
    return out;
}

PPolynomial commutator(int d1, int d2, const PPolynomial& f) {
    const OperatorSpec op1 = OperatorSpec::delta(d1);
    const OperatorSpec op2 = OperatorSpec::delta(d2);
    return apply_operator(op1, apply_operator(op2, f)) -
           apply_operator(op2, apply_operator(op1, f));
}

}  // namespace cutjoin
