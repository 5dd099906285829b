#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutjoin/combinat.hpp"
#include "oracles.hpp"

using namespace cutjoin;

TEST_CASE("make_partition sorts and validates") {
    CHECK(make_partition({1, 2, 1}).parts() == std::vector<int>{2, 1, 1});
    CHECK(make_partition({3}).parts() == std::vector<int>{3});
    CHECK(make_partition({2, 2}).parts() == std::vector<int>{2, 2});
    CHECK(make_partition({4, 1, 3}).weight() == 8);
    CHECK_THROWS_AS(make_partition({}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({-1}), std::invalid_argument);
}

TEST_CASE("exponent notation") {
    CHECK(make_partition({2, 1, 1}).exponent_notation() == "2 1^2");
    CHECK(make_partition({1, 1, 1}).exponent_notation() == "1^3");
    CHECK(make_partition({3}).exponent_notation() == "3");
    CHECK(make_partition({2, 1, 1}).exponents() ==
          std::vector<std::pair<int, int>>{{2, 1}, {1, 2}});
}

TEST_CASE("class_size examples") {
    CHECK(class_size(make_partition({1, 1}), 2) == 1);
    // enumerate S_4 and count type-(2,1,1) elements
    CHECK(testing::brute_class_counts(4)[make_partition({2, 1, 1})] == 6);
    CHECK(class_size(make_partition({2, 1, 1}), 4) == 6);
    CHECK(class_size(make_partition({3}), 3) == 2);
    CHECK_THROWS_AS(class_size(make_partition({2}), 3), std::invalid_argument);
}

TEST_CASE("count_d_cycles examples") {
    CHECK(count_d_cycles(3, 3) == 2);
    CHECK(count_d_cycles(4, 2) == 6);
    CHECK(count_d_cycles(5, 3) == 20);
    CHECK(testing::brute_class_elements(make_partition({3, 1, 1}), 5).size() == 20);
    CHECK(count_d_cycles(2, 3) == 0);  // d > n
}

TEST_CASE("class sizes match exhaustive enumeration for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto counts = testing::brute_class_counts(n);
        Int total = 0;
        for (const auto& lambda : partitions_of(n)) {
            const Int expected = counts.count(lambda) ? counts.at(lambda) : 0;
            CHECK(class_size(lambda, n) == expected);
            total += expected;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("count_d_cycles equals the class size of (d,1^{n-d})") {
    for (int n = 2; n <= 8; ++n) {
        for (int d = 2; d <= n; ++d) {
            std::vector<int> parts(1, d);
            parts.insert(parts.end(), n - d, 1);
            CHECK(count_d_cycles(n, d) == class_size(make_partition(parts), n));
        }
    }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(0).empty());
    // leading order: lexicographically decreasing
    CHECK(partitions_of(4).front() == make_partition({4}));
    CHECK(partitions_of(4).back() == make_partition({1, 1, 1, 1}));
}
