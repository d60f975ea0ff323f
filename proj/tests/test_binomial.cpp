#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macgreen/binomial.hpp"

#include <vector>

using namespace macgreen;

namespace {

// Independent oracle: Pascal-triangle additive recurrence, no factorials.
BigInt pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
    return row[static_cast<std::size_t>(k)];
}

// Exhaustive oracle: counts every representation of n at level `level`
// as a sum C(a_i,i) + ... with strictly decreasing tops over consecutive
// levels, each top below `top_cap`.
long long count_expansions(const BigInt& n, int level, long long top_cap) {
    if (n == 0) return 1;
    if (level == 0) return 0;
    long long total = 0;
    for (long long a = level; a < top_cap; ++a) {
        const BigInt c = binom(a, level);
        if (c > n) break;
        total += count_expansions(n - c, level - 1, a);
    }
    return total;
}

}  // namespace

TEST_CASE("binomial coefficients with clamping") {
    CHECK(binom(5, 3) == 10);
    CHECK(binom(4, 7) == 0);
    CHECK(binom(7, -1) == 0);
    CHECK(binom(-3, 2) == 0);
    CHECK(binom(-3, -3) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(60, 30) == pascal(60, 30));
    for (int n = 0; n <= 25; ++n)
        for (int k = -2; k <= n + 2; ++k) CHECK(binom(n, k) == pascal(n, k));
}

TEST_CASE("expansion examples") {
    const auto e1 = expand(10, 3);
    REQUIRE(e1.terms.size() == 1);
    CHECK(e1.terms[0].top == 5);
    CHECK(e1.terms[0].level == 3);

    const auto e2 = expand(14, 4);
    REQUIRE(e2.terms.size() == 4);
    CHECK(e2.terms[0] == BinomialTerm{5, 4});
    CHECK(e2.terms[1] == BinomialTerm{4, 3});
    CHECK(e2.terms[2] == BinomialTerm{3, 2});
    CHECK(e2.terms[3] == BinomialTerm{2, 1});
    CHECK(e2.value() == 14);

    const auto e3 = expand(9, 2);
    REQUIRE(e3.terms.size() == 2);
    CHECK(e3.terms[0] == BinomialTerm{4, 2});
    CHECK(e3.terms[1] == BinomialTerm{3, 1});

    CHECK_THROWS_AS(expand(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand(5, 0), std::invalid_argument);
}

TEST_CASE("expansion reconstructs and is structurally valid") {
    for (int d = 1; d <= 8; ++d)
        for (long long n = 1; n <= 10000; ++n) {
            const auto e = expand(n, d);
            REQUIRE(e.valid());
            REQUIRE(e.value() == n);
        }
}

TEST_CASE("expansion is unique among all strictly-decreasing term lists") {
    for (int d = 1; d <= 5; ++d)
        for (long long n = 1; n <= 300; ++n) CHECK(count_expansions(n, d, 4000) == 1);
}

TEST_CASE("offset evaluation") {
    CHECK(eval_offset(expand(10, 3), {-1, -1}) == 6);  // single term C(4,2)
    CHECK(eval_offset(expand(14, 4), {0, -1}) == 4);
    for (long long n : {1, 7, 10, 55, 499})
        for (int d = 1; d <= 5; ++d) CHECK(eval_offset(expand(n, d), {0, 0}) == n);
}

TEST_CASE("macaulay bound values") {
    CHECK(macaulay_bound(9, 2) == 16);
    CHECK(macaulay_bound(2, 2) == 2);
    for (int d = 1; d <= 8; ++d) CHECK(macaulay_bound(1, d) == 1);
    // single-expansion family used by the socle-degree-4 refutation
    for (long long m = 2; m <= 20; ++m)
        CHECK(macaulay_bound(binom(m + 1, 2) - 1, 2) == binom(m + 2, 3) - m);
    CHECK(macaulay_bound(0, 3) == 0);
}

TEST_CASE("green bound values") {
    CHECK(green_bound(14, 4) == 4);
    CHECK(green_bound(18, 5) == 4);
    for (int e = 3; e <= 12; ++e) CHECK(green_bound(e, e - 1) == 1);
    for (long long m = 1; m <= 6; ++m)
        for (int d = 1; d <= 6; ++d)
            CHECK(green_bound(binom(m + d, d), d) == binom(m - 1 + d, d));
    CHECK(green_bound(0, 2) == 0);
}

TEST_CASE("h2 lower bound values") {
    CHECK(h2_lower_bound(10, 4) == 9);
    for (long long m = 2; m <= 8; ++m)
        CHECK(h2_lower_bound(binom(m + 3, 3), 4) == (m + 1) * (m + 1));
    for (int e = 3; e <= 12; ++e) CHECK(h2_lower_bound(e, e) >= e);
    CHECK_THROWS_AS(h2_lower_bound(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(h2_lower_bound(5, 1), std::invalid_argument);
}

TEST_CASE("bound monotonicity") {
    for (int d = 1; d <= 6; ++d) {
        BigInt prev_mac = 0, prev_green = 0;
        for (long long n = 1; n <= 2000; ++n) {
            const BigInt mac = macaulay_bound(n, d);
            const BigInt green = green_bound(n, d);
            CHECK(mac > prev_mac);       // strictly increasing
            CHECK(green >= prev_green);  // nondecreasing
            CHECK(green <= n);
            CHECK(mac >= n);
            prev_mac = mac;
            prev_green = green;
        }
    }
}
