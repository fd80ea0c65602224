#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookcoh/bounds.hpp"
#include "hookcoh/flags.hpp"

using namespace hookcoh;

TEST_CASE("single flag groups") {
    // r=2, s=1, l=2: k=5, lambda=1, window floor pi >= -1
    auto top = single_flag_cohomology(6, 2, 1, 2, 5, 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0].alpha == 0);
    CHECK(top[0].multiplicity == 1);  // Z^{4,5}, the full exterior power

    auto mid = single_flag_cohomology(6, 2, 1, 2, 4, 1);
    REQUIRE(mid.size() == 1);
    CHECK(mid[0].alpha == 0);
    CHECK(mid[0].multiplicity == 1);

    CHECK(single_flag_cohomology(6, 2, 1, 2, 3, 0).empty());  // n_1(0) = 0
    CHECK(single_flag_cohomology(6, 2, 1, 2, 4, 0).empty());  // alpha < 0

    CHECK_THROWS_AS(single_flag_cohomology(6, 2, 1, 2, 1, 0), validity_window_error);
    CHECK_THROWS_AS(single_flag_cohomology(6, 1, 1, 2, 3, 0), std::invalid_argument);
}

TEST_CASE("product reduces to the single factor") {
    for (int p = 2; p <= 6; ++p)
        for (int q = 0; q <= 4; ++q) {
            const auto single = single_flag_cohomology(6, 2, 1, 2, p, q);
            const auto prod = product_flag_cohomology(6, 2, {{1, 2}}, p, q);
            if (single.empty()) {
                CHECK_FALSE(prod.has_value());
            } else {
                REQUIRE(prod.has_value());
                CHECK(prod->sigma == single[0].alpha);
                CHECK(prod->multiplicity == single[0].multiplicity);
                CHECK(prod->alpha_splittings ==
                      std::vector<std::vector<int>>{{single[0].alpha}});
            }
        }
}

TEST_CASE("negative sigma yields nothing") {
    // q + r lambda + s - p < 0
    CHECK_FALSE(product_flag_cohomology(6, 2, {{1, 2}}, 6, 0).has_value());
}

TEST_CASE("envelopes") {
    const Envelopes env = envelopes(2, {{1, 2}});
    CHECK(env.p_max == 5);
    CHECK(env.q_max == 2);

    const Envelopes two = envelopes(3, {{1, 2}, {2, 1}});
    CHECK(two.p_max == 1 * 6 + pi_rs(3, 1) + pi_rs(3, 2));
    CHECK(two.q_max == 1 * 3 + pi_rs(3, 1) + pi_rs(3, 2) - 3);
}

TEST_CASE("vanishing beyond the envelopes") {
    for (int r = 2; r <= 4; ++r)
        for (int s = 1; s < r; ++s)
            for (int l = 1; l <= 3; ++l) {
                const std::vector<FlagFactor> fs{{s, l}};
                const Envelopes env = envelopes(r, fs);
                for (int p = 0; p <= env.p_max + 4; ++p)
                    for (int q = 0; q <= env.q_max + 4; ++q) {
                        std::optional<ProductCohomology> group;
                        try {
                            group = product_flag_cohomology(10, r, fs, p, q);
                        } catch (const validity_window_error&) {
                            continue;
                        }
                        if (p > env.p_max || q > env.q_max) CHECK_FALSE(group.has_value());
                    }
            }
}

TEST_CASE("containment premise bounds sigma") {
    for (int r = 2; r <= 3; ++r)
        for (int s = 1; s < r; ++s)
            for (int l = 1; l <= 3; ++l) {
                const std::vector<FlagFactor> fs{{s, l}, {s, l}};
                const Envelopes env = envelopes(r, fs);
                for (int p = 0; p <= env.p_max; ++p)
                    for (int q = 0; q <= env.q_max; ++q) {
                        std::optional<ProductCohomology> group;
                        try {
                            group = product_flag_cohomology(10, r, fs, p, q);
                        } catch (const validity_window_error&) {
                            continue;
                        }
                        if (!group) continue;
                        for (int sigma = 0; sigma <= 2 * l; ++sigma)
                            if (containment_premise(env, r, p, q, sigma))
                                CHECK(group->sigma <= sigma);
                    }
            }
}

TEST_CASE("splittings depend only on sigma") {
    const auto group = product_flag_cohomology(10, 3, {{1, 2}, {2, 2}}, 14, 8);
    if (group) {
        for (const auto& split : group->alpha_splittings) {
            int total = 0;
            for (int a : split) total += a;
            CHECK(total == group->sigma);
        }
    }
    // every (p, q) inside the window with the same sigma carries the same
    // splitting family
    const std::vector<FlagFactor> fs{{1, 2}, {1, 1}};
    const Envelopes env = envelopes(2, fs);
    std::map<int, std::vector<std::vector<int>>> by_sigma;
    for (int p = 0; p <= env.p_max; ++p)
        for (int q = 0; q <= env.q_max; ++q) {
            std::optional<ProductCohomology> group2;
            try {
                group2 = product_flag_cohomology(8, 2, fs, p, q);
            } catch (const validity_window_error&) {
                continue;
            }
            if (!group2) continue;
            auto [it, inserted] = by_sigma.emplace(group2->sigma, group2->alpha_splittings);
            CHECK((inserted || it->second == group2->alpha_splittings));
        }
}
