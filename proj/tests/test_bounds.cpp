#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "hookcoh/bounds.hpp"

using namespace hookcoh;

TEST_CASE("triangle numbers") {
    CHECK(triangle(0) == 0);
    CHECK(triangle(3) == 6);
    CHECK(triangle(4) == 10);
}

TEST_CASE("delta") {
    CHECK(delta_index(0) == 1);
    CHECK(delta_index(1) == 2);
    CHECK(delta_index(2) == 2);
    CHECK(delta_index(3) == 3);
    CHECK(delta_index(5) == 3);
    CHECK(delta_index(6) == 4);
    for (long long x = 0; x <= 300; ++x) {
        const int d = delta_index(x);
        CHECK(static_cast<long long>(d) * (d - 1) / 2 <= x);
        CHECK(x < static_cast<long long>(d + 1) * d / 2);
    }
}

TEST_CASE("the first ten elements of the order") {
    std::vector<std::pair<long long, long long>> points;
    for (long long x = 0; x <= 6; ++x)
        for (long long s = 0; s <= 3; ++s) points.emplace_back(x, s);
    std::sort(points.begin(), points.end(), [](auto a, auto b) {
        return order_key(a.first, a.second) < order_key(b.first, b.second);
    });
    const std::vector<std::pair<long long, long long>> expected = {
        {0, 0}, {1, 0}, {0, 1}, {2, 0}, {3, 0},
        {1, 1}, {0, 2}, {4, 0}, {2, 1}, {5, 0}};
    points.resize(10);
    CHECK(points == expected);
    CHECK(order_key(3, 1) == order_key(3, 1));
}

TEST_CASE("order key is injective") {
    std::set<std::tuple<long long, long long, long long>> seen;
    for (long long x = 0; x <= 500; ++x)
        for (long long s = 0; s <= 20; ++s) {
            const OrderKey k = order_key(x, s);
            CHECK(seen.insert({k.k1, k.k2, k.k3}).second);
        }
}

TEST_CASE("descent lemma of the order") {
    for (long long x = 0; x <= 200; ++x) {
        const long long r = delta_index(x);
        for (long long sigma = 0; sigma <= 10; ++sigma)
            for (long long mu = -(x / r) - 1; mu <= sigma; ++mu) {
                if (mu == 0) continue;
                if (x + mu * r < 0 || sigma - mu < 0) continue;
                CHECK(order_key(x + mu * r, sigma - mu) < order_key(x, sigma));
            }
    }
}

TEST_CASE("bound Q") {
    CHECK(bound_q(5, 5, 0, 1, 4, 2) == 2);
    CHECK(bound_q(5, 4, 1, 1, 4, 2) == 11);
    for (long long n = 1; n <= 6; ++n)
        CHECK(bound_q(n, n, 0, 1, 7, 3) == 4);  // delta(0) (ae-k)
    CHECK_THROWS_AS(bound_q(3, 4, 0, 1, 4, 2), std::invalid_argument);
}

TEST_CASE("bound P mirrors bound Q") {
    CHECK(bound_p(5, 5, 0, 1, 4, 2) == 2);
    CHECK(bound_p(5, 4, 1, 1, 4, 2) == 11);
    for (long long n = 2; n <= 12; ++n)
        for (long long v = 0; v <= n; ++v)
            for (long long s = 0; s <= 3; ++s)
                CHECK(bound_p(n, v, s, 1, 5, 2) == bound_q(n, v, s, 1, 5, 2));
}

TEST_CASE("combined predicate") {
    for (long long n = 0; n <= 8; ++n)
        CHECK(vanishes(n, n, n, 0, 1, 3, 2) == (n > 1));  // ae-k = 1
    // ae = k: the Kodaira-shaped threshold p+q > n
    for (long long n = 2; n <= 8; ++n)
        for (long long p = 0; p <= n; ++p)
            for (long long q = 0; q <= n; ++q)
                CHECK(vanishes(n, p, q, 0, 1, 4, 4) == (p + q > n));
    // p+q <= n is never covered when ae-k+sigma >= 0
    for (long long n = 2; n <= 8; ++n)
        for (long long p = 0; p <= n; ++p)
            for (long long q = 0; q + p <= n; ++q)
                CHECK_FALSE(vanishes(n, p, q, 1, 2, 5, 8));
    CHECK(vanishes(4, 5, 0, 0, 1, 4, 2));  // trivially true outside
}

TEST_CASE("symmetric form") {
    for (long long d = 0; d <= 20; ++d)
        for (long long sigma = 0; sigma <= 8; ++sigma)
            for (long long t = 0; t <= 8; ++t)
                CHECK(symmetric_form(d, 0, delta_index(d), sigma, t + sigma) ==
                      bound_q(d, 0, sigma, 1, t, 0));
    CHECK(symmetric_form(9, 2, 3, 0, 5) == 9 - 2 + 3 * 5);
    CHECK(symmetric_form(9, 2, 3, 4, 1) == 9 - 2 + 3 * 5);
}

TEST_CASE("bracket pair bound") {
    CHECK(bracket_pair_bound(0, 0, 0, 0, 3, 2) == 0);
    CHECK(bracket_pair_bound(1, 0, 0, 1, 2, 1) == 2);
    CHECK(bracket_pair_bound(0, 3, 0, 4, 1, 1) == 7);
    CHECK_THROWS_AS(bracket_pair_bound(1, 1, 1, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("subset sum counts") {
    CHECK(pi_rs(2, 1) == 2);
    CHECK(pi_rs(4, 0) == 0);
    CHECK(n_s_count(2, 1, 0) == 0);
    CHECK(n_s_count(2, 1, 1) == 1);
    CHECK(n_s_count(2, 1, 2) == 1);
    CHECK(n_s_count(2, 1, 3) == 0);
    CHECK(n_s_count(4, 0, 0) == 1);
    CHECK(n_s_count(4, 2, 3) == 1);   // {1,2}
    CHECK(n_s_count(4, 2, 5) == 2);   // {1,4}, {2,3}
    CHECK_THROWS_AS(n_s_count(2, 3, 1), std::invalid_argument);

    for (int r = 1; r <= 8; ++r)
        for (int s = 0; s <= r; ++s) {
            long long total = 0;
            for (long long v : n_s_vector(r, s)) total += v;
            long long binom = 1;
            for (int i = 1; i <= s; ++i) binom = binom * (r - s + i) / i;
            CHECK(total == binom);
        }
}

TEST_CASE("convolution matches direct pair enumeration") {
    for (int r = 2; r <= 5; ++r)
        for (int s1 = 0; s1 <= r; ++s1)
            for (int s2 = 0; s2 <= r; ++s2) {
                const auto v1 = n_s_vector(r, s1);
                const auto v2 = n_s_vector(r, s2);
                for (long long pi = 0; pi <= pi_rs(r, s1) + pi_rs(r, s2); ++pi) {
                    long long direct = 0;
                    for (long long p1 = 0; p1 <= pi; ++p1) {
                        if (p1 >= static_cast<long long>(v1.size())) break;
                        if (pi - p1 >= static_cast<long long>(v2.size())) continue;
                        direct += v1[static_cast<std::size_t>(p1)] *
                                  v2[static_cast<std::size_t>(pi - p1)];
                    }
                    CHECK(n_s_product(r, {s1, s2}, pi) == direct);
                }
            }
}
