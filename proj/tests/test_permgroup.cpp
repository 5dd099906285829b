#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cutjoin/permgroup.hpp"
#include "cutjoin/psymring.hpp"
#include "oracles.hpp"

using namespace cutjoin;

namespace {

Permutation perm(std::vector<int> images) { return Permutation::from_images(std::move(images)); }

}  // namespace

TEST_CASE("compose uses (s*g)(x) = s(g(x))") {
    const Permutation t12 = Permutation::from_cycles(3, {{1, 2}});
    const Permutation c123 = Permutation::from_cycles(3, {{1, 2, 3}});
    CHECK(t12 * c123 == Permutation::from_cycles(3, {{2, 3}}));
    CHECK(Permutation::identity(3) * c123 == c123);
    CHECK(c123 * Permutation::from_cycles(3, {{1, 3, 2}}) == Permutation::identity(3));
    CHECK_THROWS_AS(t12 * Permutation::identity(4), std::invalid_argument);
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation::from_cycles(6, {{1, 2, 3}, {4, 5}})) ==
          make_partition({3, 2, 1}));
    CHECK(cycle_type(Permutation::identity(4)) == make_partition({1, 1, 1, 1}));
    CHECK(cycle_type(Permutation::from_cycles(4, {{1, 2}, {3, 4}})) == make_partition({2, 2}));
}

TEST_CASE("canonical_of_type builds consecutive blocks") {
    CHECK(canonical_of_type(make_partition({3})) == Permutation::from_cycles(3, {{1, 2, 3}}));
    CHECK(canonical_of_type(make_partition({2, 1})) == Permutation::from_cycles(3, {{1, 2}}));
    CHECK(canonical_of_type(make_partition({2, 2})) ==
          Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
    for (const auto& lambda : partitions_of(6))
        CHECK(cycle_type(canonical_of_type(lambda)) == lambda);
}

TEST_CASE("for_each_of_type enumerates each class element once") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            std::set<Permutation> seen;
            for_each_of_type(lambda, n, [&](const Permutation& g) {
                CHECK(cycle_type(g) == lambda);
                CHECK(seen.insert(g).second);
            });
            CHECK(Int(seen.size()) == class_size(lambda, n));
        }
    }
}

TEST_CASE("multiply_class_left examples") {
    {
        const auto k = multiply_class_left(make_partition({2}), Permutation::identity(2));
        CHECK(k.terms.size() == 1);
        CHECK(k.terms.at(Permutation::from_cycles(2, {{1, 2}})) == 1);
    }
    {
        const auto k =
            multiply_class_left(make_partition({2, 1}), Permutation::from_cycles(3, {{1, 2, 3}}));
        CHECK(k.terms.size() == 3);
        for (const auto& [g, c] : k.terms) {
            CHECK(cycle_type(g) == make_partition({2, 1}));
            CHECK(c == 1);
        }
    }
    {
        const auto k = multiply_class_left(make_partition({2, 1, 1}),
                                           Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
        PPolynomial expected;
        expected.add_term(PMonomial::p(4), 4);
        expected.add_term(PMonomial::p(2) * PMonomial::p(1, 2), 2);
        CHECK(phi_linear(k) == expected);
    }
    CHECK_THROWS_AS(multiply_class_left(make_partition({2}), Permutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("is_transitive") {
    CHECK(is_transitive({Permutation::from_cycles(3, {{1, 2}}),
                         Permutation::from_cycles(3, {{2, 3}})},
                        3));
    CHECK_FALSE(is_transitive({Permutation::from_cycles(3, {{1, 2}})}, 3));
    CHECK_FALSE(is_transitive({Permutation::from_cycles(4, {{1, 2}, {3, 4}})}, 4));
    CHECK(is_transitive({}, 1));
    CHECK_FALSE(is_transitive({}, 2));
}

TEST_CASE("dist") {
    CHECK(dist(1, Permutation::from_cycles(3, {{1, 2}}), {1, 3}) == 2);
    CHECK(dist(1, Permutation::from_cycles(3, {{1, 2, 3}}), {1, 2, 3}) == 1);
    CHECK(dist(1, Permutation::from_cycles(4, {{1, 2, 3, 4}}), {1, 3}) == 2);
    CHECK_THROWS_AS(dist(2, Permutation::identity(3), {1, 3}), std::invalid_argument);
}

TEST_CASE("classify_tuple reproduces the worked cases") {
    const Permutation g = Permutation::from_cycles(3, {{1, 2}});
    {
        // [3,2,1]: j_1=1, j_2=2, j_3=3; restriction is (j_1 j_2)(j_3): Case 4.
        const auto cls = classify_tuple(g, CycleTuple({3, 2, 1}, 3));
        CHECK(cls.type_tau == Permutation::from_cycles(3, {{1, 2}}));
        CHECK(cls.distances == std::vector<int>{1, 1, 1});
    }
    {
        // [1,3,2]: j_1=2, j_2=3, j_3=1; restriction is (j_1 j_3)(j_2): Case 3.
        const auto cls = classify_tuple(g, CycleTuple({1, 3, 2}, 3));
        CHECK(cls.type_tau == Permutation::from_cycles(3, {{1, 3}}));
        CHECK(cls.distances == std::vector<int>{1, 1, 1});
    }
    {
        const auto cls = classify_tuple(Permutation::identity(3), CycleTuple({3, 2, 1}, 3));
        CHECK(cls.type_tau == Permutation::identity(3));
        CHECK(cls.distances == std::vector<int>{1, 1, 1});
    }
}

TEST_CASE("cbar_subset examples") {
    CHECK(cbar_subset(Permutation::from_cycles(3, {{1, 2, 3}}),
                      Permutation::from_cycles(2, {{1, 2}}), {1, 2})
              .size() == 3);
    CHECK(cbar_subset(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::identity(2),
                      {2, 2})
              .size() == 8);
    CHECK(cbar_subset(Permutation::identity(2), Permutation::identity(2), {2, 2}).empty());
}

TEST_CASE("pi is d-to-1 onto the d-cycles") {
    for (int n = 2; n <= 6; ++n) {
        for (int d = 2; d <= std::min(4, n); ++d) {
            std::map<Permutation, int> hits;
            for_each_cycle_tuple(n, d, [&](const CycleTuple& t) { ++hits[t.as_cycle()]; });
            CHECK(Int(hits.size()) == count_d_cycles(n, d));
            for (const auto& [cyc, count] : hits) {
                CHECK(count == d);
                CHECK(cycle_type(cyc).parts().front() == d);
            }
        }
    }
}

namespace {

// Classify all tuples for one alpha and group them; used by several
// invariants below.
std::map<TupleClassification, std::vector<CycleTuple>> grouped(const Permutation& alpha,
                                                               int d) {
    std::map<TupleClassification, std::vector<CycleTuple>> groups;
    for_each_cycle_tuple(alpha.degree(), d,
                         [&](const CycleTuple& t) { groups[classify_tuple(alpha, t)].push_back(t); });
    return groups;
}

void check_cover_and_counting(const Permutation& alpha, int d) {
    const auto groups = grouped(alpha, d);
    std::size_t total = 0;
    for (const auto& [cls, members] : groups) {
        total += members.size();
        // cbar_subset returns exactly this group
        CHECK(cbar_subset(alpha, cls.type_tau, cls.distances) == members);

        // constant image class: one cycle type across the group
        const Partition type0 = cycle_type(members.front().as_cycle() * alpha);
        for (const auto& t : members) CHECK(cycle_type(t.as_cycle() * alpha) == type0);

        // counting formula, distinct merged lengths only
        std::vector<int> merged;
        for (const auto& cyc : cls.type_tau.cycles()) {
            int sum = 0;
            for (int k : cyc) sum += cls.distances[k - 1];
            merged.push_back(sum);
        }
        std::set<int> uniq(merged.begin(), merged.end());
        if (uniq.size() == merged.size()) {
            Int expected = 1;
            const auto alpha_type = cycle_type(alpha);
            for (int len : merged) {
                int c = 0;
                for (int part : alpha_type.parts())
                    if (part == len) ++c;
                expected *= Int(c) * len;
            }
            CHECK(Int(members.size()) == expected);
        }
    }
    // disjoint cover: groups partition all d-tuples
    std::size_t expected_total = 1;
    for (int i = 0; i < d; ++i) expected_total *= alpha.degree() - i;
    CHECK(total == expected_total);
}

}  // namespace

TEST_CASE("classification partitions the tuples; image class constant; counting formula") {
    for (int n = 2; n <= 5; ++n)
        for_each_permutation(n, [&](const Permutation& alpha) {
            for (int d = 2; d <= std::min(3, n); ++d) check_cover_and_counting(alpha, d);
        });
    // n = 6 on class representatives
    for (const auto& lambda : partitions_of(6))
        for (int d = 2; d <= 3; ++d) check_cover_and_counting(canonical_of_type(lambda), d);
}

TEST_CASE("counting formula over-counts on repeated merged lengths") {
    // alpha = (12)(34), tau = id, distances (2,2): brute force gives 8 while
    // the product formula would give (2*2)*(2*2) = 16.
    const Permutation alpha = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    CHECK(cbar_subset(alpha, Permutation::identity(2), {2, 2}).size() == 8);
}

TEST_CASE("distance is invariant under left multiplication by the tuple cycle") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        const Permutation alpha = perm(images);
        const int d = 2 + static_cast<int>(rng() % std::min(3, n - 1));
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 1);
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(d);
        const CycleTuple tuple(pts, n);
        const Permutation alpha2 = tuple.as_cycle() * alpha;
        for (int j : pts) CHECK(dist(j, alpha, pts) == dist(j, alpha2, pts));
    }
}
