#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hookcoh/partition.hpp"

using namespace hookcoh;

TEST_CASE("hook tables") {
    CHECK(Partition{4, 2, 1}.hook_table() ==
          std::vector<std::vector<int>>{{6, 4, 2, 1}, {3, 1}, {1}});
    CHECK(Partition{1}.hook_table() == std::vector<std::vector<int>>{{1}});
    CHECK(Partition{2, 2}.hook_table() == std::vector<std::vector<int>>{{3, 2}, {2, 1}});
    CHECK(Partition{}.hook_table().empty());
}

TEST_CASE("hook rows and columns strictly decrease") {
    for (const Partition& p : enumerate_box({6, 6})) {
        const auto table = p.hook_table();
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j + 1 < table[i].size(); ++j)
                CHECK(table[i][j] > table[i][j + 1]);
            if (i + 1 < table.size())
                for (std::size_t j = 0; j < table[i + 1].size(); ++j)
                    CHECK(table[i][j] > table[i + 1][j]);
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    for (const Partition& p : enumerate_box({5, 5})) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
        CHECK(p.conjugate().durfee_rank() == p.durfee_rank());
    }
}

TEST_CASE("durfee rank") {
    CHECK(Partition{3, 2, 1}.durfee_rank() == 2);
    CHECK(Partition{}.durfee_rank() == 0);
    CHECK(Partition{5, 5, 2, 2, 2}.durfee_rank() == 2);
}

TEST_CASE("containment") {
    CHECK(contains(Partition{2, 1}, Partition{3, 2, 1}));
    CHECK_FALSE(contains(Partition{3}, Partition{2, 2}));
    CHECK(contains(Partition{}, Partition{5, 1}));
}

TEST_CASE("rank-part insertion") {
    CHECK(insert_parts(Partition{3, 2, 1}, 2) == Partition{3, 2, 2, 2, 1});
    CHECK(insert_parts(Partition{3, 2, 1}, 0) == Partition{3, 2, 1});
    CHECK(insert_parts(Partition{2, 2}, 1) == Partition{2, 2, 2});
}

TEST_CASE("box enumeration") {
    CHECK(enumerate_box({1, 1}).size() == 2);
    CHECK(enumerate_box({2, 2}).size() == 6);
    CHECK(enumerate_box({3, 2}).size() == 10);
    CHECK(enumerate_box({4, 5}).size() == static_cast<std::size_t>(binomial(9, 4)));

    const auto box = enumerate_box({2, 2});
    CHECK(box[0] == Partition{});
    CHECK(box[1] == Partition{1});
    CHECK(box[2] == Partition{1, 1});  // graded, then lexicographic
    CHECK(box[3] == Partition{2});
    // every shape exactly once
    CHECK(std::set<Partition>(box.begin(), box.end()).size() == box.size());
}

TEST_CASE("littlewood-richardson basics") {
    const auto pieri = lr_product(Partition{1}, Partition{1}, 10);
    CHECK(pieri == std::map<Partition, long long>{{Partition{2}, 1}, {Partition{1, 1}, 1}});

    const auto prod = lr_product(Partition{2, 1}, Partition{1, 1, 1}, 4);
    CHECK(prod.at(Partition{3, 2, 1}) == 1);

    const auto truncated = lr_product(Partition{2, 1, 1}, Partition{1, 1}, 3);
    CHECK(truncated == std::map<Partition, long long>{{Partition{2, 2, 2}, 1},
                                                      {Partition{3, 2, 1}, 1}});

    // the classical square of (2,1), multiplicity 2 at (3,2,1)
    const auto square = lr_product(Partition{2, 1}, Partition{2, 1}, 6);
    CHECK(square.at(Partition{3, 2, 1}) == 2);
    CHECK(square.at(Partition{4, 2}) == 1);
    CHECK(square.at(Partition{2, 2, 2}) == 1);
    long long total = 0;
    for (const auto& [nu, c] : square) {
        (void)nu;
        total += c;
    }
    CHECK(total == 8);
}

TEST_CASE("littlewood-richardson symmetry") {
    std::vector<Partition> shapes;
    for (const Partition& p : enumerate_box({10, 10}))
        if (p.weight() <= 8) shapes.push_back(p);
    for (const Partition& a : shapes)
        for (const Partition& b : shapes) {
            if (a.weight() + b.weight() > 10) continue;
            if (b < a) continue;
            CHECK(lr_product(a, b, 10) == lr_product(b, a, 10));
        }
}

TEST_CASE("littlewood-richardson dimension consistency") {
    std::vector<Partition> shapes;
    for (const Partition& p : enumerate_box({5, 8}))
        if (p.weight() <= 6) shapes.push_back(p);
    for (int e = 3; e <= 5; ++e) {
        for (const Partition& a : shapes) {
            if (a.length() > e) continue;
            for (const Partition& b : shapes) {
                if (b.length() > e || a.weight() + b.weight() > 8) continue;
                long long sum = 0;
                for (const auto& [nu, c] : lr_product(a, b, e))
                    sum += c * schur_dimension(nu, e);
                CHECK(sum == schur_dimension(a, e) * schur_dimension(b, e));
            }
        }
    }
}

TEST_CASE("bracket shapes") {
    CHECK(bracket_to_partition(BracketShape::rank2(0, 0, 0, 0, 4)) ==
          Partition{2, 2, 2, 2});
    CHECK(bracket_to_partition(BracketShape::rank2(1, 0, 1, 2, 4)) == Partition{3, 2, 1});
    CHECK(bracket_to_partition(BracketShape::rank1(0, 2, 5)) == Partition{1, 1, 1});
    CHECK(bracket_to_partition(BracketShape::rank1(3, 4, 5)) == Partition{4});
    CHECK_THROWS_AS(bracket_to_partition(BracketShape::rank2(0, 1, 0, 0, 4)),
                    std::invalid_argument);  // a < b
    CHECK_THROWS_AS(bracket_to_partition(BracketShape::rank2(1, 0, 2, 1, 4)),
                    std::invalid_argument);  // c > d
    CHECK_THROWS_AS(bracket_to_partition(BracketShape::rank2(1, 0, 0, 3, 4)),
                    std::invalid_argument);  // second column shorter than 2

    // injectivity over valid shapes at fixed e
    for (int e = 3; e <= 5; ++e) {
        std::set<Partition> seen;
        int count = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= e - 2; ++c)
                    for (int d = c; d <= e - 2; ++d) {
                        const Partition p =
                            bracket_to_partition(BracketShape::rank2(a, b, c, d, e));
                        CHECK(seen.insert(p).second);
                        ++count;
                    }
        CHECK(count > 0);
    }
}

TEST_CASE("hook functor shapes") {
    CHECK(hook_functor_shape(0, 4) == Partition{4});
    CHECK(hook_functor_shape(2, 4) == Partition{2, 1, 1});
    CHECK(hook_functor_shape(4, 5) == Partition{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(hook_functor_shape(3, 3), std::invalid_argument);
}

TEST_CASE("schur dimensions") {
    CHECK(schur_dimension(Partition{1}, 2) == 2);
    CHECK(schur_dimension(Partition{1, 1}, 2) == 1);
    CHECK(schur_dimension(Partition{2}, 2) == 3);
    CHECK(schur_dimension(Partition{}, 5) == 1);
    CHECK(schur_dimension(Partition{2, 1}, 3) == 8);  // adjoint of GL(3)
    CHECK_THROWS_AS(schur_dimension(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
    CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("3,3,0") == Partition{3, 3});
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("x"), std::invalid_argument);
    CHECK(Partition{4, 2, 1}.to_string() == "(4,2,1)");
    CHECK(Partition{}.cli_string() == "0");
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
}
