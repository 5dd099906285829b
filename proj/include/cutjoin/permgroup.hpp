#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "cutjoin/combinat.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

/// A permutation of {1..n}, stored by images: (*this)(x) = images[x-1].
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    static Permutation from_images(std::vector<int> images);
    // Unlisted points are fixed. Each cycle (c1 c2 ... ck) maps c1->c2->...->ck->c1.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Disjoint cycles including fixed points; each cycle starts at its
    // minimum, cycles ordered by minimum.
    std::vector<std::vector<int>> cycles() const;

    std::string cycle_notation() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// (s*g)(x) = s(g(x)): the right factor acts first.
Permutation operator*(const Permutation& s, const Permutation& g);

Partition cycle_type(const Permutation& g);

// Disjoint cycles are consecutive blocks (1..l1)(l1+1..l1+l2)...
Permutation canonical_of_type(const Partition& lambda);

// Calls f on every element of S_n.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& f);

// Calls f on every permutation of S_n with cycle type lambda, each exactly once.
void for_each_of_type(const Partition& lambda, int n,
                      const std::function<void(const Permutation&)>& f);

/// Finite formal sum of permutations with exact rational coefficients.
struct GroupAlgebraElement {
    int degree = 0;
    std::map<Permutation, Rat> terms;  // no zero coefficients are stored

    explicit GroupAlgebraElement(int n = 0) : degree(n) {}
    void add(const Permutation& g, const Rat& c);
};

// K_lambda * g = sum over sigma of type lambda of sigma*g.
GroupAlgebraElement multiply_class_left(const Partition& lambda, const Permutation& g);

bool is_transitive(const std::vector<Permutation>& gens, int n);

/// An ordered tuple of d distinct points of {1..n}. Written [a_1,...,a_d];
/// reading it as the cycle (a_1 a_2 ... a_d) gives as_cycle(). Indexing in
/// the classification sense is reversed: j_k = a_{d+1-k}, so a tuple written
/// [j_d,...,j_1] has point_j(1) = last entry.
struct CycleTuple {
    std::vector<int> points;
    int degree = 0;

    CycleTuple() = default;
    CycleTuple(std::vector<int> pts, int n);

    int length() const { return static_cast<int>(points.size()); }
    int point_j(int k) const { return points[points.size() - k]; }
    Permutation as_cycle() const;

    auto operator<=>(const CycleTuple&) const = default;
};

// All d-tuples of distinct points of {1..n}, in lexicographic order.
void for_each_cycle_tuple(int n, int d, const std::function<void(const CycleTuple&)>& f);

// Least l >= 1 with alpha^l(j) in marked; j must itself be marked.
int dist(int j, const Permutation& alpha, const std::vector<int>& marked);

/// Result of classifying (alpha, [j_d,...,j_1]): type_tau(k) = l means the
/// first marked point on the alpha-orbit of j_k is j_l; distances[k-1] is
/// how many alpha-steps that takes.
struct TupleClassification {
    Permutation type_tau;        // element of S_d
    std::vector<int> distances;  // (i_1,...,i_d), each >= 1

    auto operator<=>(const TupleClassification&) const = default;
};

TupleClassification classify_tuple(const Permutation& alpha, const CycleTuple& tuple);

// Brute force over all d-tuples of distinct points: those classifying as
// (tau, distances). Test oracle, not a production path.
std::vector<CycleTuple> cbar_subset(const Permutation& alpha, const Permutation& tau,
                                    const std::vector<int>& distances);

}  // namespace cutjoin
