#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookcoh/admissible.hpp"
#include "hookcoh/extremal.hpp"

using namespace hookcoh;

TEST_CASE("family partitions") {
    CHECK(family_partition({2, 1, 0, 1, 1}, 3) == Partition{2, 1});
    CHECK(family_partition({2, 1, 0, 0, 0}, 3) == Partition{2});
    CHECK(family_partition({2, 1, 1, 0, 0}, 3) == Partition{2, 1, 1});
    CHECK(family_partition({3, 2, 0, 0, 0}, 4) == Partition{3, 3});
    CHECK_THROWS_AS(family_partition({2, 1, 0, 2, 1}, 3), std::invalid_argument);  // (gamma,c)=(l-a,a)
    CHECK_THROWS_AS(family_partition({0, 1, 0, 0, 0}, 3), std::invalid_argument);  // a=0, alpha>0
    CHECK_THROWS_AS(family_partition({2, 0, 0, 3, 1}, 4), std::invalid_argument);  // c > a
    CHECK_THROWS_AS(family_partition({2, 1, 1, 2, 1}, 4), std::invalid_argument);  // c > a-1 with beta,gamma > 0
}

TEST_CASE("family first part formula") {
    CHECK(family_first_part({2, 1, 0, 1, 1}, 3) == 3);
    CHECK(hat(family_partition({2, 1, 0, 1, 1}, 3), 3, 2).part(1) == 3);
    CHECK(family_first_part({2, 1, 0, 0, 0}, 3) == 2);
    CHECK(family_first_part({0, 0, 0, 0, 0}, 3) == 0);

    // cross-check against hat on representatives whose tail is real
    for (int l = 2; l <= 5; ++l)
        for (int a = 0; a <= l - 1; ++a)
            for (int alpha = 0; alpha <= 2; ++alpha)
                for (int beta = 0; beta <= 2; ++beta)
                    for (int gamma = 0; gamma <= l - a; ++gamma)
                        for (int c = 0; c <= a; ++c) {
                            if (gamma == 0 && c > 0) continue;
                            Partition nu;
                            try {
                                nu = family_partition({a, alpha, beta, c, gamma}, l);
                            } catch (const std::invalid_argument&) {
                                continue;
                            }
                            const int r = std::max(nu.length(), 1);
                            CHECK(family_first_part({a, alpha, beta, c, gamma}, l) ==
                                  hat(nu, l, r).part(1));
                        }
}

TEST_CASE("a-chain and flattening") {
    CHECK(a_chain(Partition{3, 2, 2, 1, 1, 1}, 5, 6) == std::vector<int>{1, 3, 6});
    CHECK(flatten(Partition{3, 2, 2, 1, 1, 1}, 5, 6) == Partition{3, 3, 2, 2, 2, 1});
    CHECK(flatten(Partition{3, 3, 2, 2, 2, 1}, 5, 6) == Partition{3, 3, 2, 2, 2, 1});
    CHECK(flatten(Partition{}, 4, 5) == Partition{});
}

TEST_CASE("flatten preserves the first part of hat and never loses weight") {
    for (int r = 1; r <= 5; ++r)
        for (int l = 2; l <= 5; ++l)
            for (const Partition& nu : enumerate_box({r, l - 1})) {
                const Partition flat = flatten(nu, l, r);
                CHECK(contains(nu, flat));
                CHECK(hat(flat, l, r).part(1) == hat(nu, l, r).part(1));
                CHECK(hat(flat, l, r).weight() >= hat(nu, l, r).weight());
            }
}

TEST_CASE("transformation A") {
    const Partition out = transform_A(Partition{2}, 0, 2, 0, 3);
    CHECK(out == Partition{1, 1, 1});
    CHECK(hat(Partition{2}, 3, 3).weight() == 2);
    CHECK(hat(out, 3, 3).weight() == 4);  // gain l-a+1 = 2
    CHECK_THROWS_AS(transform_A(Partition{2, 2}, 0, 2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(transform_A(Partition{2}, 0, 2, 1, 3), std::invalid_argument);  // b > a-2
}

TEST_CASE("transformation B") {
    // smallest instance: one flat block of l-1 over an empty row
    const Partition out = transform_B(Partition{2}, 0, 2, 0, 1, 3);
    CHECK(out == Partition{2, 1});
    CHECK(hat(out, 3, 2).weight() - hat(Partition{2}, 3, 2).weight() == 2);  // 2(l-a)

    const Partition tall = transform_B(Partition{2, 1, 1}, 0, 1, 0, 1, 3);
    CHECK(tall == Partition{1, 1, 1, 1, 1});
    CHECK(hat(tall, 3, 5).weight() - hat(Partition{2, 1, 1}, 3, 5).weight() == 4);

    CHECK_THROWS_AS(transform_B(Partition{2, 2}, 0, 1, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("adding a cell strictly increases the hat weight") {
    for (int r = 1; r <= 4; ++r)
        for (int l = 2; l <= 4; ++l)
            for (const Partition& nu : enumerate_box({r, l - 1}))
                for (int j = 1; j <= r; ++j) {
                    if (nu.part(j) + 1 > l - 1) continue;
                    if (j > 1 && nu.part(j - 1) <= nu.part(j)) continue;
                    std::vector<int> parts(static_cast<std::size_t>(std::max(nu.length(), j)), 0);
                    for (int t = 1; t <= static_cast<int>(parts.size()); ++t)
                        parts[static_cast<std::size_t>(t - 1)] = nu.part(t);
                    ++parts[static_cast<std::size_t>(j - 1)];
                    const Partition bigger{std::move(parts)};
                    CHECK(hat(bigger, l, r).weight() > hat(nu, l, r).weight());
                    CHECK(contains(hat(nu, l, r), hat(bigger, l, r)));
                }
}

TEST_CASE("maximize small cases") {
    const auto res = maximize(2, 4, 3);
    CHECK(res.pmax == 2);
    CHECK(res.params.alpha + res.params.beta == 1);
    CHECK(res.params.gamma + res.params.c == 1);

    for (int n = 2; n <= 8; ++n)
        for (int l = 2; l <= 4; ++l)
            CHECK(maximize(1, n, l).pmax == std::min(l - 1, n - 1));

    CHECK(maximize(3, 7, 5).pmax == brute_force_pmax(3, 7, 5));
}

TEST_CASE("maximize does not stop at the light greedy fixpoint") {
    // the cell/A/B loop from the empty profile stalls at weight 10 here
    const auto res = maximize(4, 10, 3);
    CHECK(res.pmax == 12);
    CHECK(res.pmax == brute_force_pmax(4, 10, 3));
    CHECK(res.fixpoint_nu == Partition{2, 2, 2});
    CHECK(res.params.alpha + res.params.beta == 10 / 3);
    CHECK(res.params.gamma + res.params.c == 10 % 3);
}

TEST_CASE("maximize equals brute force and the family enumeration") {
    for (int n = 2; n <= 10; ++n)
        for (int r = 1; r < n; ++r)
            for (int l = 2; l <= 5; ++l) {
                const auto res = maximize(r, n, l);
                CHECK(res.pmax == brute_force_pmax(r, n, l));
                CHECK(res.pmax == family_enum_max(r, n, l));
                CHECK(is_admissible(res.fixpoint_lambda, l));
                CHECK(res.fixpoint_lambda.part(1) <= n - r);
                CHECK(res.fixpoint_lambda.length() <= r);
                CHECK(res.params.gamma <= l - res.params.a);
                CHECK(family_partition(res.params, l) == res.fixpoint_nu);
            }
}
