#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "stcores/exact.hpp"
#include "test_support.hpp"

using stcores::ExactAccumulator;
using stcores::ExactInt;
using stcores::ExactRatio;

TEST_CASE("decimal rendering") {
    CHECK(stcores::to_decimal(ExactInt(0)) == "0");
    CHECK(stcores::to_decimal(ExactInt(-17)) == "-17");
    ExactInt big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    CHECK(stcores::to_decimal(big) == "1" + std::string(40, '0'));
}

TEST_CASE("exact division") {
    CHECK(stcores::exact_div(ExactInt(84), ExactInt(7)) == 12);
    CHECK(stcores::exact_div(ExactInt(-84), ExactInt(7)) == -12);
    CHECK_THROWS_AS(stcores::exact_div(ExactInt(10), ExactInt(4)), stcores::DivisibilityError);
    CHECK_THROWS_AS(stcores::exact_div(ExactInt(10), ExactInt(0)), stcores::DivisibilityError);
}

TEST_CASE("binomial coefficients") {
    CHECK(stcores::binomial(0, 0) == 1);
    CHECK(stcores::binomial(8, 3) == 56);
    CHECK(stcores::binomial(5, 7) == 0);
    CHECK(stcores::binomial(5, -1) == 0);
    CHECK_THROWS_AS(stcores::binomial(-1, 0), std::invalid_argument);
    for (long long n = 0; n <= 40; ++n)
        for (long long k = 0; k <= n; ++k)
            REQUIRE(stcores::binomial(n, k) == testsupport::pascal_binomial(n, k));
    CHECK(stcores::binomial(100, 50) ==
          ExactInt("100891344545564193334812497256"));
}

TEST_CASE("catalan numbers") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (long long n = 0; n < 10; ++n) CHECK(stcores::catalan(n) == expected[n]);
    CHECK(stcores::catalan(12) == 208012);
}

TEST_CASE("rational normalization and arithmetic") {
    ExactRatio r(ExactInt(6), ExactInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK_FALSE(r.is_integer());

    ExactRatio whole(ExactInt(14), ExactInt(2));
    CHECK(whole.is_integer());
    CHECK(whole.to_string() == "7");

    CHECK(ExactRatio(ExactInt(1), ExactInt(2)) + ExactRatio(ExactInt(1), ExactInt(3)) ==
          ExactRatio(ExactInt(5), ExactInt(6)));
    CHECK(ExactRatio(ExactInt(2), ExactInt(3)) * ExactRatio(ExactInt(9), ExactInt(4)) ==
          ExactRatio(ExactInt(3), ExactInt(2)));
    CHECK(ExactRatio(ExactInt(1), ExactInt(2)) != ExactRatio(ExactInt(1), ExactInt(3)));
    CHECK_THROWS_AS(ExactRatio(ExactInt(1), ExactInt(0)), stcores::DivisibilityError);
}

TEST_CASE("accumulator spills past 64 bits") {
    ExactAccumulator acc;
    const long long chunk = 1LL << 62;
    for (int i = 0; i < 4; ++i) acc.add(chunk);
    CHECK(acc.value() == ExactInt(1) << 64);

    ExactAccumulator other;
    other.add(5);
    other.add(-3);
    acc.merge(other);
    CHECK(acc.value() == (ExactInt(1) << 64) + 2);
}
