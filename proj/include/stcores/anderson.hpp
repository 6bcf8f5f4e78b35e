#pragma once

#include <span>
#include <vector>

#include "stcores/errors.hpp"
#include "stcores/exact.hpp"
#include "stcores/ideal_enum.hpp"
#include "stcores/partition.hpp"
#include "stcores/poset.hpp"

namespace stcores {

// Ideal {a_1 > ... > a_j} maps to the partition (a_1-(j-1), ..., a_{j-1}-1, a_j):
// the a_k become the first-column hook lengths.
inline Partition ideal_to_partition(std::span<const long long> elements_desc) {
    const long long j = static_cast<long long>(elements_desc.size());
    std::vector<long long> parts(static_cast<std::size_t>(j));
    for (long long k = 0; k < j; ++k)
        parts[static_cast<std::size_t>(k)] = elements_desc[static_cast<std::size_t>(k)] - (j - 1 - k);
    return Partition(std::move(parts));
}

inline Partition ideal_to_partition(const OrderIdeal& ideal) {
    return ideal_to_partition(std::span<const long long>(ideal.elements));
}

// Size of the core without building it: sum of elements minus binom(j,2),
// since part k is a_k - (j-1-k).
inline ExactInt core_size_of_ideal(std::span<const long long> elements_desc) {
    const long long j = static_cast<long long>(elements_desc.size());
    long long sum = 0;
    for (long long a : elements_desc) sum += a;
    return ExactInt(sum) - ExactInt(j) * (j - 1) / 2;
}

inline ExactInt core_size_of_ideal(const OrderIdeal& ideal) {
    return core_size_of_ideal(std::span<const long long>(ideal.elements));
}

// Inverse bijection: the first-column hook set of an (s,t)-core is an order
// ideal of P_(s,t). Rejects non-cores; for verified cores a failure of the
// ideal check is impossible and flags an internal bug.
inline OrderIdeal partition_to_ideal(const Partition& p, long long s, long long t) {
    if (s > t) std::swap(s, t);
    if (s < 1 || std::gcd(s, t) != 1)
        throw NotCoprimeError("partition_to_ideal: gcd(" + std::to_string(s) + "," +
                              std::to_string(t) + ") != 1");
    if (!is_st_core(p, s, t))
        throw NotACoreError("partition_to_ideal: " + p.to_string() + " is not a (" +
                            std::to_string(s) + "," + std::to_string(t) + ")-core");

    const GapPoset poset = build_gap_poset(s, t);
    std::vector<long long> hooks = first_column_hooks(p);
    for (long long h : hooks)
        if (!poset.contains(h))
            throw BijectionInternalError("partition_to_ideal: hook " + std::to_string(h) +
                                         " of a verified core is not a gap");
    bool closed = false;
    try {
        closed = is_order_ideal(poset, hooks);
    } catch (const std::invalid_argument&) {
        closed = false;
    }
    if (!closed)
        throw BijectionInternalError("partition_to_ideal: hook set of " + p.to_string() +
                                     " is not downward closed");
    return OrderIdeal{s, t, std::move(hooks)};
}

}  // namespace stcores
