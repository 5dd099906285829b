#include "cutjoin/hurwitz.hpp"

#include <functional>
#include <stdexcept>

#include "cutjoin/wop.hpp"

namespace cutjoin {

namespace {

Partition d_cycle_type(int n, int d) {
    std::vector<int> parts(1, d);
    parts.insert(parts.end(), n - d, 1);
    return make_partition(std::move(parts));
}

}  // namespace

Int cov_bruteforce(int n, const std::vector<Partition>& types) {
    for (const auto& t : types)
        if (t.weight() != n)
            throw std::invalid_argument("cov_bruteforce: type weight does not match n");
    const int k = static_cast<int>(types.size());
    if (k == 0) return n == 1 ? 1 : 0;

    Int count = 0;
    std::vector<Permutation> chosen;
    std::function<void(const Permutation&)> rec = [&](const Permutation& product) {
        const int i = static_cast<int>(chosen.size());
        if (i == k - 1) {
            const Permutation last = product.inverse();
            if (cycle_type(last) != types[k - 1]) return;
            chosen.push_back(last);
            if (is_transitive(chosen, n)) ++count;
            chosen.pop_back();
            return;
        }
        for_each_of_type(types[i], n, [&](const Permutation& sigma) {
            chosen.push_back(sigma);
            rec(product * sigma);
            chosen.pop_back();
        });
    };
    rec(Permutation::identity(n));
    return count;
}

MonodromyTally dcycle_monodromy_tally(int n, int d, int k) {
    MonodromyTally tally;
    if (k == 0) {
        const Partition type = cycle_type(Permutation::identity(n));
        tally[type] = {n == 1 ? 1 : 0, 1};
        return tally;
    }
    if (d > n) return tally;  // no d-cycles, nothing to enumerate

    std::vector<Permutation> cycles;
    for_each_of_type(d_cycle_type(n, d), n,
                     [&](const Permutation& c) { cycles.push_back(c); });

    std::vector<Permutation> chosen;
    std::function<void(const Permutation&)> rec = [&](const Permutation& product) {
        if (static_cast<int>(chosen.size()) == k) {
            const Permutation last = product.inverse();
            chosen.push_back(last);
            auto& entry = tally[cycle_type(last)];
            if (is_transitive(chosen, n)) ++entry.first;
            ++entry.second;
            chosen.pop_back();
            return;
        }
        for (const auto& c : cycles) {
            chosen.push_back(c);
            rec(product * c);
            chosen.pop_back();
        }
    };
    rec(Permutation::identity(n));
    return tally;
}

Int hurwitz_number(const HurwitzQuery& q) {
    if (q.alpha.weight() != q.n)
        throw std::invalid_argument("hurwitz_number: alpha must be a partition of n");
    if (q.d < 2 || q.d > q.n) throw std::invalid_argument("hurwitz_number: need 2 <= d <= n");
    if (q.k < 0) throw std::invalid_argument("hurwitz_number: need k >= 0");
    const MonodromyTally tally = dcycle_monodromy_tally(q.n, q.d, q.k);
    auto it = tally.find(q.alpha);
    if (it == tally.end()) return 0;
    return q.connected ? it->second.first : it->second.second;
}

ZSeries build_hhat_series(int d, int w_max, int k_max) {
    PPolynomial level = PPolynomial::one();
    Rat inv_factorial = 1;
    for (int m = 1; m <= w_max; ++m) {
        inv_factorial /= m;
        level.add_term(PMonomial::p(1, m), inv_factorial);
    }
    ZSeries out(k_max, w_max);
    out.add_level(0, level);
    const OperatorSpec delta = OperatorSpec::delta(d);
    Rat inv_kfact = 1;
    for (int k = 1; k <= k_max; ++k) {
        level = apply_operator(delta, level);
        inv_kfact /= k;
        out.add_level(k, level * inv_kfact);
    }
    return out;
}

namespace {

ZSeries brute_series(int d, int w_max, int k_max, bool connected) {
    ZSeries out(k_max, w_max);
    if (!connected) out.add(0, PMonomial::unit(), 1);
    for (int n = 1; n <= w_max; ++n) {
        const Rat inv_nfact = Rat(1, factorial(n));
        Rat inv_kfact = 1;
        for (int k = 0; k <= k_max; ++k) {
            if (k > 0) inv_kfact /= k;
            for (const auto& [type, counts] : dcycle_monodromy_tally(n, d, k)) {
                const Int& c = connected ? counts.first : counts.second;
                if (c == 0) continue;
                out.add(k, PMonomial::from_partition(type), Rat(c) * inv_nfact * inv_kfact);
            }
        }
    }
    return out;
}

std::string series_diff_detail(const ZSeries& a, const ZSeries& b, const std::string& what) {
    const ZSeries diff = a - b;
    for (const auto& [k, f] : diff.levels()) {
        const auto& [m, c] = *f.terms().begin();
        return what + ": first mismatch at z^" + std::to_string(k) + " " + m.to_string() +
               ": " + rat_to_string(a.coefficient(k, m)) + " vs " +
               rat_to_string(b.coefficient(k, m));
    }
    return what + ": equal";
}

}  // namespace

ZSeries brute_hhat_series(int d, int w_max, int k_max) {
    return brute_series(d, w_max, k_max, false);
}

ZSeries brute_h_series(int d, int w_max, int k_max) {
    return brute_series(d, w_max, k_max, true);
}

ZSeries connected_from_log(const ZSeries& s) { return series_log(s); }

namespace {

VerifyReport recursion_report(int n, int d, int k, bool connected) {
    if (k < 1) throw std::invalid_argument("recursion needs k >= 1");
    const auto pick = [&](const std::pair<Int, Int>& counts) {
        return connected ? counts.first : counts.second;
    };

    PPolynomial lhs;
    for (const auto& [type, counts] : dcycle_monodromy_tally(n, d, k))
        lhs.add_term(PMonomial::from_partition(type), Rat(pick(counts)));

    PPolynomial rhs;
    for (const auto& [type, counts] : dcycle_monodromy_tally(n, d, k - 1)) {
        const Int c = pick(counts);
        if (c == 0 || d > n) continue;  // no d-cycles: the class sum is zero
        rhs += phi_linear(multiply_class_left(d_cycle_type(n, d), canonical_of_type(type))) *
               Rat(c);
    }

    VerifyReport r;
    r.pass = (lhs == rhs);
    r.detail = "n=" + std::to_string(n) + " d=" + std::to_string(d) +
               " k=" + std::to_string(k) + (connected ? " (connected)" : " (disconnected)") +
               ": LHS = " + format_ppolynomial(lhs) + ", RHS = " + format_ppolynomial(rhs);
    return r;
}

}  // namespace

VerifyReport verify_recursion(int n, int d, int k) {
    return recursion_report(n, d, k, false);
}

VerifyReport verify_recursion_connected(int n, int d, int k) {
    return recursion_report(n, d, k, true);
}

VerifyReport verify_pde(int d, int w_max, int k_max) {
    VerifyReport r;
    const ZSeries flow = build_hhat_series(d, w_max, k_max);
    const ZSeries brute = brute_hhat_series(d, w_max, k_max);
    if (!(flow == brute)) {
        r.pass = false;
        r.detail = series_diff_detail(flow, brute, "W-flow vs brute-force coefficients");
        return r;
    }

    // Initial condition: level 0 must be the truncation of e^{p1}.
    PPolynomial exp_p1 = PPolynomial::one();
    Rat inv_factorial = 1;
    for (int m = 1; m <= w_max; ++m) {
        inv_factorial /= m;
        exp_p1.add_term(PMonomial::p(1, m), inv_factorial);
    }
    if (!(brute.level(0) == exp_p1)) {
        r.pass = false;
        r.detail = "initial condition: level 0 is " + format_ppolynomial(brute.level(0));
        return r;
    }

    const ZSeries lhs = brute.ddz();
    ZSeries rhs(k_max > 0 ? k_max - 1 : 0, w_max);
    const OperatorSpec delta = OperatorSpec::delta(d);
    for (int k = 0; k <= rhs.k_max(); ++k) rhs.add_level(k, apply_operator(delta, brute.level(k)));
    if (!(lhs == rhs)) {
        r.pass = false;
        r.detail = series_diff_detail(lhs, rhs, "d/dz vs Delta_d");
        return r;
    }

    r.pass = true;
    r.detail = "pde d=" + std::to_string(d) + " w_max=" + std::to_string(w_max) +
               " k_max=" + std::to_string(k_max) + ": ok";
    return r;
}

}  // namespace cutjoin
