#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "stcores/exact.hpp"
#include "stcores/partition.hpp"
#include "stcores/poset.hpp"

namespace testsupport {

// All partitions of n, parts weakly decreasing, in no particular order.
inline std::vector<std::vector<long long>> partitions_of(long long n) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> current;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (long long part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Hook length by literally counting arm and leg cells.
inline long long naive_hook(const stcores::Partition& p, std::size_t i, std::size_t j) {
    const auto& parts = p.parts();
    long long arm = parts[i] - static_cast<long long>(j) - 1;
    long long leg = 0;
    for (std::size_t r = i + 1; r < parts.size(); ++r)
        if (parts[r] > static_cast<long long>(j)) ++leg;
    return arm + leg + 1;
}

// Every order ideal of a small poset by brute subset filtering, each returned
// as a descending element list, the whole family sorted in canonical order
// (lexicographic on the descending lists).
inline std::vector<std::vector<long long>> naive_ideals(const stcores::GapPoset& poset) {
    const auto& gaps = poset.gaps();
    const std::size_t n = gaps.size();
    std::vector<std::vector<long long>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (long long below : poset.covers_down(gaps[i])) {
                const std::size_t j = static_cast<std::size_t>(
                    std::lower_bound(gaps.begin(), gaps.end(), below) - gaps.begin());
                if (!(mask >> j & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<long long> ideal;
        for (std::size_t i = n; i-- > 0;)
            if (mask >> i & 1) ideal.push_back(gaps[i]);
        out.push_back(std::move(ideal));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Pascal's triangle, independent of the multiplicative implementation.
inline stcores::ExactInt pascal_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    std::vector<stcores::ExactInt> row{1};
    for (long long i = 1; i <= n; ++i) {
        std::vector<stcores::ExactInt> next(static_cast<std::size_t>(i) + 1, 1);
        for (long long j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace testsupport
