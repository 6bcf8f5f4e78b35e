#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "stcores/partition.hpp"
#include "test_support.hpp"

using stcores::Partition;

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("5,3,3,2").parts() == std::vector<long long>{5, 3, 3, 2});
    CHECK(Partition::parse("1").parts() == std::vector<long long>{1});

    CHECK_THROWS_AS(Partition::parse("3,5"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3, 2,"), std::invalid_argument);
}

TEST_CASE("partition text form") {
    CHECK(Partition().to_string() == "-");
    CHECK(Partition::parse("5,3,3,2").to_string() == "5,3,3,2");
    CHECK(Partition::parse("4,2,1,1").size() == 8);
}

TEST_CASE("conjugate") {
    CHECK(stcores::conjugate(Partition::parse("5,3,3,2")).parts() ==
          std::vector<long long>{4, 4, 3, 1, 1});
    CHECK(stcores::conjugate(Partition()).empty());
    for (long long n = 0; n <= 8; ++n)
        for (const auto& parts : testsupport::partitions_of(n)) {
            const Partition p(parts);
            REQUIRE(stcores::conjugate(stcores::conjugate(p)) == p);
            REQUIRE(stcores::conjugate(p).size() == p.size());
        }
}

TEST_CASE("hook lengths") {
    const stcores::HookGrid expected{{8, 7, 5, 2, 1}, {5, 4, 2}, {4, 3, 1}, {2, 1}};
    CHECK(stcores::hook_lengths(Partition::parse("5,3,3,2")) == expected);

    for (long long n = 0; n <= 8; ++n)
        for (const auto& parts : testsupport::partitions_of(n)) {
            const Partition p(parts);
            const stcores::HookGrid grid = stcores::hook_lengths(p);
            REQUIRE(grid.size() == parts.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                REQUIRE(grid[i].size() == static_cast<std::size_t>(parts[i]));
                for (std::size_t j = 0; j < grid[i].size(); ++j)
                    REQUIRE(grid[i][j] == testsupport::naive_hook(p, i, j));
            }
        }
}

TEST_CASE("first column hooks") {
    CHECK(stcores::first_column_hooks(Partition::parse("5,3,3,2")) ==
          std::vector<long long>{8, 5, 4, 2});
    CHECK(stcores::first_column_hooks(Partition()).empty());
    for (const auto& parts : testsupport::partitions_of(9)) {
        const auto hooks = stcores::first_column_hooks(Partition(parts));
        for (std::size_t k = 1; k < hooks.size(); ++k) REQUIRE(hooks[k - 1] > hooks[k]);
    }
}

TEST_CASE("core predicates") {
    const Partition fig = Partition::parse("5,3,3,2");
    CHECK(stcores::is_s_core(fig, 6));
    for (long long s = 9; s <= 20; ++s) CHECK(stcores::is_s_core(fig, s));
    for (long long s : {1, 2, 3, 4, 5, 7, 8}) CHECK_FALSE(stcores::is_s_core(fig, s));

    CHECK(stcores::is_st_core(Partition::parse("4,2,1,1"), 3, 5));
    CHECK_FALSE(stcores::is_st_core(Partition::parse("2,1"), 3, 5));
    CHECK(stcores::is_st_core(Partition(), 3, 5));
    CHECK_THROWS_AS(stcores::is_s_core(fig, 0), std::invalid_argument);
}
