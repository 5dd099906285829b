#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cutjoin/combinat.hpp"
#include "cutjoin/permgroup.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

/// A monomial in p_1, p_2, ...: sparse exponent map, canonical (indices
/// ascending, exponents positive). The empty map is the unit monomial.
class PMonomial {
public:
    PMonomial() = default;

    static PMonomial unit() { return PMonomial(); }
    static PMonomial p(int k, int e = 1);
    static PMonomial from_partition(const Partition& lambda);

    // (index, exponent) pairs, index ascending.
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    int exponent_of(int k) const;
    bool is_unit() const { return exps_.empty(); }
    int weight() const;  // sum of k * e_k
    int total_degree() const;

    // The partition whose parts are the indices with multiplicity; weight >= 1.
    Partition to_partition() const;

    PMonomial operator*(const PMonomial& o) const;
    // Exponent of p_k decreased by one; requires exponent_of(k) >= 1.
    PMonomial divided_by_p(int k) const;

    auto operator<=>(const PMonomial&) const = default;

    std::string to_string() const;  // "p1^3*p2"; unit prints "1"

private:
    std::vector<std::pair<int, int>> exps_;
};

/// Exact sparse polynomial in p_1, p_2, ... over the rationals.
class PPolynomial {
public:
    PPolynomial() = default;
    PPolynomial(const Rat& c);  // constant
    PPolynomial(const PMonomial& m, const Rat& c = 1);

    static PPolynomial zero() { return PPolynomial(); }
    static PPolynomial one() { return PPolynomial(Rat(1)); }

    const std::map<PMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const PMonomial& m) const;
    int max_weight() const;  // 0 for the zero polynomial

    void add_term(const PMonomial& m, const Rat& c);

    PPolynomial& operator+=(const PPolynomial& o);
    PPolynomial& operator-=(const PPolynomial& o);
    PPolynomial& operator*=(const Rat& c);
    PPolynomial operator+(const PPolynomial& o) const;
    PPolynomial operator-(const PPolynomial& o) const;
    PPolynomial operator*(const PPolynomial& o) const;
    PPolynomial operator*(const Rat& c) const;
    bool operator==(const PPolynomial&) const = default;

    // Formal d/dp_k.
    PPolynomial differentiate(int k) const;
    // Drops every term of weight > w.
    PPolynomial truncate_weight(int w) const;

    std::string to_string() const;

private:
    std::map<PMonomial, Rat> terms_;
};

PPolynomial operator*(const Rat& c, const PPolynomial& f);

// Phi of a single permutation: one p_l factor per cycle of length l.
PMonomial phi(const Permutation& g);

// Linear extension of phi to the group algebra.
PPolynomial phi_linear(const GroupAlgebraElement& x);

/// Series in z over the p-ring, truncated at z-order k_max and p-weight
/// w_max. Every operation closes over the truncation.
class ZSeries {
public:
    ZSeries(int k_max, int w_max);

    int k_max() const { return k_max_; }
    int w_max() const { return w_max_; }

    const std::map<int, PPolynomial>& levels() const { return levels_; }
    const PPolynomial& level(int k) const;  // zero polynomial if absent
    Rat coefficient(int k, const PMonomial& m) const;
    void add(int k, const PMonomial& m, const Rat& c);
    void add_level(int k, const PPolynomial& f);
    bool is_zero() const;

    ZSeries operator+(const ZSeries& o) const;
    ZSeries operator-(const ZSeries& o) const;
    ZSeries operator*(const ZSeries& o) const;
    ZSeries operator*(const Rat& c) const;
    bool operator==(const ZSeries& o) const;

    // Formal d/dz; result truncation (k_max - 1, w_max).
    ZSeries ddz() const;

private:
    int k_max_;
    int w_max_;
    std::map<int, PPolynomial> levels_;  // z-order -> coefficient polynomial
};

// exp of a series with zero constant term.
ZSeries series_exp(const ZSeries& s);
// log of a series with constant term 1.
ZSeries series_log(const ZSeries& s);

// Text syntax used by the CLI: rational coefficients "num/den", monomials
// "p1^3*p2", terms joined by + and -. Whitespace is insignificant.
PPolynomial parse_ppolynomial(const std::string& text);
std::string format_ppolynomial(const PPolynomial& f);

}  // namespace cutjoin
