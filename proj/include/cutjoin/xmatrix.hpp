#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cutjoin/permgroup.hpp"
#include "cutjoin/psymring.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

/// Monomial in the matrix entries X_ab: sparse exponent map keyed by (a,b).
class XMonomial {
public:
    XMonomial() = default;

    static XMonomial unit() { return XMonomial(); }
    static XMonomial var(int a, int b, int e = 1);

    const std::vector<std::pair<std::pair<int, int>, int>>& exponents() const {
        return exps_;
    }
    bool is_unit() const { return exps_.empty(); }
    int exponent_of(int a, int b) const;
    int total_degree() const;
    int max_index() const;

    XMonomial operator*(const XMonomial& o) const;
    XMonomial divided_by(int a, int b) const;  // requires exponent_of(a,b) >= 1

    auto operator<=>(const XMonomial&) const = default;

    std::string to_string() const;  // "X[1,2]*X[2,1]^2"; unit prints "1"

private:
    std::vector<std::pair<std::pair<int, int>, int>> exps_;
};

/// Polynomial in the X_ab with 1 <= a,b <= N, exact rational coefficients.
class XPolynomial {
public:
    explicit XPolynomial(int N);
    XPolynomial(int N, const XMonomial& m, const Rat& c = 1);

    int truncation() const { return N_; }
    const std::map<XMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const XMonomial& m) const;

    void add_term(const XMonomial& m, const Rat& c);

    XPolynomial& operator+=(const XPolynomial& o);
    XPolynomial& operator-=(const XPolynomial& o);
    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial operator*(const Rat& c) const;
    bool operator==(const XPolynomial&) const = default;

    XPolynomial differentiate(int a, int b) const;

    std::string to_string() const;

private:
    int N_;
    std::map<XMonomial, Rat> terms_;
};

// p_k realized at truncation N: sum over (a_1..a_k) in {1..N}^k of
// prod_i X_{a_i a_{i+1}} with a_{k+1} = a_1.
XPolynomial trace_power(int N, int k);

// D_ab = sum_c X_ac d/dX_bc, truncated to c <= N.
XPolynomial apply_D(int a, int b, const XPolynomial& f);

// The normal-ordered product D_{(a_1..a_d)}: every derivative is taken
// before any multiplication.
XPolynomial apply_D_tuple(const std::vector<int>& a, const XPolynomial& f);

// W([d]) = (1/d) sum over all index tuples of D_{(a_1..a_d)}, truncated.
XPolynomial apply_w_truncated(int d, const XPolynomial& f);

// The quiver monomial of g with vertices renamed by labels: one factor
// X_{labels[i] labels[g(i)]} per point i.
XMonomial x_monomial_of_permutation(const Permutation& g, const std::vector<int>& labels,
                                    int N);

// Ring homomorphism p_k -> trace_power(N, k).
XPolynomial p_to_x_subst(const PPolynomial& f, int N);

}  // namespace cutjoin
