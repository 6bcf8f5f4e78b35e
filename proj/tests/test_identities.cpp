#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "stcores/identities.hpp"
#include "test_support.hpp"

using stcores::ExactInt;

TEST_CASE("closed sequence seeds") {
    const long long g[] = {0, 0, 1, 10, 70, 420};
    const long long f[] = {0, 0, 0, 1, 10, 68};
    const long long h[] = {0, 0, 1, 7, 37, 176};
    for (long long j = 0; j <= 5; ++j) {
        CHECK(stcores::g_closed(j) == g[j]);
        CHECK(stcores::f_closed(j) == f[j]);
        CHECK(stcores::h_closed(j) == h[j]);
    }
    CHECK(stcores::g_closed(12) == 29745716);  // 11 * binom(24,12)
}

TEST_CASE("recursions reproduce the closed forms") {
    for (long long s = 0; s <= 60; ++s) {
        CHECK(stcores::f_rho_dp(s) == stcores::f_closed(s));
        CHECK(stcores::g_sigma_dp(s) == stcores::g_closed(s));
    }
}

TEST_CASE("closed forms match brute enumeration") {
    for (long long s = 0; s <= 8; ++s) {
        const auto& agg = stcores::ts_brute_aggregates(s);
        CHECK(agg.f_tau == stcores::h_closed(s));
        CHECK(agg.f_rho == stcores::f_closed(s));
        CHECK(agg.f_sigma - agg.sum_binom2 == stcores::g_closed(s));
    }
    for (long long s = 2; s <= 8; ++s) CHECK(stcores::g_sigma_brute(s) == stcores::g_closed(s));
}

TEST_CASE("machine checkable recurrences") {
    for (const auto& rec : stcores::check_wz1(60)) {
        INFO(rec.claim);
        CHECK(rec.equal());
    }
    for (const auto& rec : stcores::check_wz2(60)) {
        INFO(rec.claim);
        CHECK(rec.equal());
    }
}

TEST_CASE("fiber weight terms") {
    CHECK(stcores::m_term(1, 3) == 2);
    CHECK(stcores::m_term(2, 3) == 1);
    CHECK(stcores::m_term(3, 3) == 11);
    CHECK(stcores::subtracted_term(1, 3) == 0);
    CHECK(stcores::subtracted_term(2, 3) == 0);
    CHECK(stcores::subtracted_term(3, 3) == 4);

    for (long long s = 1; s <= 7; ++s) {
        ExactInt m_total = 0, sub_total = 0;
        for (long long i = 1; i <= s; ++i) {
            m_total += stcores::m_term(i, s);
            sub_total += stcores::subtracted_term(i, s);
        }
        const auto& agg = stcores::ts_brute_aggregates(s);
        CHECK(m_total == agg.f_sigma);
        CHECK(sub_total == agg.sum_binom2);
        CHECK(m_total - sub_total == stcores::g_closed(s));
    }
}

TEST_CASE("size gain from widening 3n-2 to 3n+1") {
    CHECK(stcores::delta_closed(1) == 10);
    CHECK(stcores::delta_closed(2) == 56);
    CHECK(stcores::delta_closed(3) == 165);
    for (long long n = 1; n <= 4; ++n) {
        CHECK(stcores::delta_closed(n) == stcores::binomial(3 * n + 2, 3));
        CHECK(stcores::delta_families(n) == stcores::delta_closed(n));
        CHECK(stcores::delta_enum(n) == stcores::delta_closed(n));
        CHECK(static_cast<long long>(stcores::delta_family_sizes(n).size()) == 3 * n + 1);
    }
    CHECK(stcores::delta_family_sizes(2) ==
          std::vector<ExactInt>{6, 10, 16, 4, 4, 6, 10});
    CHECK(stcores::delta_family_sizes(1) == std::vector<ExactInt>{2, 5, 1, 2});
}

TEST_CASE("every new core is in exactly one family") {
    for (long long n = 1; n <= 3; ++n) {
        const auto poset = stcores::build_gap_poset(3, 3 * n + 1);
        long long new_cores = 0;
        stcores::for_each_ideal(poset, [&](std::span<const long long> ideal) {
            if (!stcores::is_s_core(stcores::ideal_to_partition(ideal), 3 * n - 2)) ++new_cores;
        });
        CHECK(new_cores == 3 * n + 1);
    }
}

TEST_CASE("quartic family totals") {
    CHECK(stcores::s4_total(1) == 10);
    CHECK(stcores::s4_total(2) == 70);
    CHECK(stcores::s4_total(3) == 270);
    CHECK(stcores::s4_total(4) == 770);
    for (long long n = 1; n <= 4; ++n)
        CHECK(stcores::s4_total(n) == stcores::core_statistics(4, 2 * n + 1).sum_sizes);
    for (const auto& rec : stcores::check_s4_recurrence(40)) {
        INFO(rec.claim);
        CHECK(rec.equal());
        CHECK(rec.lhs == 0);
    }
}
