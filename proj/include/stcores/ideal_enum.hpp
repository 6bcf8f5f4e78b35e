#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "stcores/errors.hpp"
#include "stcores/exact.hpp"
#include "stcores/poset.hpp"

namespace stcores {

struct EnumOptions {
    std::uint64_t cap = 100'000'000ULL;
    int threads = 1;  // 1 keeps the canonical order; more trade order for speed
};

// Exact number of order ideals of P_(s,t): binomial(s+t,s)/(s+t).
inline ExactInt expected_ideal_count(long long s, long long t) {
    if (s > t) std::swap(s, t);
    if (s == 0 && t == 1) return 1;
    if (s < 1 || t < 1) throw std::invalid_argument("expected_ideal_count: s,t must be positive");
    if (std::gcd(s, t) != 1)
        throw NotCoprimeError("expected_ideal_count: gcd(" + std::to_string(s) + "," +
                              std::to_string(t) + ") != 1");
    return exact_div(binomial(s + t, s), s + t);
}

inline void ensure_under_cap(long long s, long long t, std::uint64_t cap) {
    const ExactInt n = expected_ideal_count(s, t);
    if (n > ExactInt(cap)) throw CapExceededError(to_decimal(n), std::to_string(cap));
}

namespace detail {

// Elements in decreasing value order with precomputed down-cover indexes.
// Decreasing order is a linear extension read backwards: when element j is
// decided, everything that could force it in (its upper covers) has already
// been decided, so a required-count per element gives an O(1) branch test.
struct EnumScaffold {
    std::vector<long long> elems;            // strictly decreasing
    std::vector<std::array<int, 2>> down;    // indexes into elems, -1 if absent

    explicit EnumScaffold(const GapPoset& p) {
        elems.assign(p.gaps().rbegin(), p.gaps().rend());
        const int m = static_cast<int>(elems.size());
        std::vector<int> idx_of(p.frobenius_number() > 0
                                    ? static_cast<std::size_t>(p.frobenius_number()) + 1
                                    : 0,
                                -1);
        for (int i = 0; i < m; ++i) idx_of[static_cast<std::size_t>(elems[i])] = i;
        down.resize(static_cast<std::size_t>(m));
        auto lookup = [&](long long v) {
            return (v >= 1 && v < static_cast<long long>(idx_of.size()))
                       ? idx_of[static_cast<std::size_t>(v)]
                       : -1;
        };
        for (int i = 0; i < m; ++i)
            down[static_cast<std::size_t>(i)] = {lookup(elems[static_cast<std::size_t>(i)] - p.s()),
                                                 lookup(elems[static_cast<std::size_t>(i)] - p.t())};
    }

    int count() const { return static_cast<int>(elems.size()); }
};

// Depth-first walk of the include/exclude decision tree. Exclude is tried
// first, so leaves appear in lexicographic order of the descending element
// lists: the empty ideal first, the full poset last.
class DfsRunner {
public:
    explicit DfsRunner(const EnumScaffold& sc)
        : sc_(sc), required_(sc.elems.size(), 0) {
        stack_.reserve(sc_.elems.size());
    }

    // Replay the first `depth` include/exclude decisions from a bitmask
    // (bit j set = include element j).
    void load_prefix(std::uint64_t mask, int depth) {
        stack_.clear();
        std::fill(required_.begin(), required_.end(), 0);
        for (int j = 0; j < depth; ++j)
            if (mask >> j & 1) push(j);
    }

    template <class Visit>
    void run(int from, Visit&& visit) {
        dfs(from, visit);
    }

private:
    void push(int idx) {
        stack_.push_back(sc_.elems[static_cast<std::size_t>(idx)]);
        for (int c : sc_.down[static_cast<std::size_t>(idx)])
            if (c >= 0) ++required_[static_cast<std::size_t>(c)];
    }
    void pop(int idx) {
        stack_.pop_back();
        for (int c : sc_.down[static_cast<std::size_t>(idx)])
            if (c >= 0) --required_[static_cast<std::size_t>(c)];
    }

    template <class Visit>
    void dfs(int idx, Visit& visit) {
        if (idx == sc_.count()) {
            visit(std::span<const long long>(stack_));
            return;
        }
        // skipping idx is legal only if no included element covers it
        if (required_[static_cast<std::size_t>(idx)] == 0) dfs(idx + 1, visit);
        push(idx);
        dfs(idx + 1, visit);
        pop(idx);
    }

    const EnumScaffold& sc_;
    std::vector<long long> stack_;
    std::vector<int> required_;
};

// All feasible decision prefixes of the given depth, in canonical order.
inline std::vector<std::uint64_t> collect_prefixes(const EnumScaffold& sc, int depth) {
    std::vector<std::uint64_t> out;
    std::vector<int> required(sc.elems.size(), 0);
    std::uint64_t mask = 0;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == depth) {
            out.push_back(mask);
            return;
        }
        if (required[static_cast<std::size_t>(j)] == 0) self(self, j + 1);
        mask |= std::uint64_t(1) << j;
        for (int c : sc.down[static_cast<std::size_t>(j)])
            if (c >= 0) ++required[static_cast<std::size_t>(c)];
        self(self, j + 1);
        for (int c : sc.down[static_cast<std::size_t>(j)])
            if (c >= 0) --required[static_cast<std::size_t>(c)];
        mask &= ~(std::uint64_t(1) << j);
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

// Visits every order ideal exactly once as a strictly decreasing span of gap
// values, in canonical order (lexicographic by descending element list).
template <class Visitor>
void for_each_ideal(const GapPoset& poset, Visitor&& visit) {
    detail::EnumScaffold sc(poset);
    detail::DfsRunner runner(sc);
    runner.run(0, visit);
}

// Product enumeration of the fiber J_i(T_s): ideals whose least missing
// element is i. Every such ideal is {1..i-1} plus an ideal of T_{i-1}
// embedded up-left of i plus an ideal of T_{s-i} embedded right of i.
template <class Visitor>
void for_each_ideal_in_fiber(long long s, long long i, Visitor&& visit) {
    if (s < 1 || i < 1 || i > s)
        throw std::invalid_argument("for_each_ideal_in_fiber: need 1 <= i <= s");
    const GapPoset left_poset = build_staircase_poset(i - 1);
    const GapPoset right_poset = build_staircase_poset(s - i);

    // inverse of the split maps, monotone in the sub-poset value
    const auto embed_left = [s, i](long long w) { return (w / i + 1) * (s + 1) + w % i; };
    const auto embed_right = [s, i](long long w) {
        return (w / (s - i + 1)) * (s + 1) + w % (s - i + 1) + i;
    };

    std::vector<long long> prefix;
    for (long long v = i - 1; v >= 1; --v) prefix.push_back(v);

    std::vector<long long> left_emb, right_emb, combined;
    for_each_ideal(left_poset, [&](std::span<const long long> left) {
        left_emb.clear();
        for (long long w : left) left_emb.push_back(embed_left(w));
        for_each_ideal(right_poset, [&](std::span<const long long> right) {
            right_emb.clear();
            for (long long w : right) right_emb.push_back(embed_right(w));
            combined.clear();
            std::merge(left_emb.begin(), left_emb.end(), right_emb.begin(), right_emb.end(),
                       std::back_inserter(combined), std::greater<>());
            // every prefix value is below both embedded ranges
            combined.insert(combined.end(), prefix.begin(), prefix.end());
            visit(std::span<const long long>(combined));
        });
    });
}

// Parallel exact reduction over all ideals. visit(acc, span) folds one ideal
// into an accumulator; merge(into, from) combines accumulators and must be
// commutative and associative, so the result is independent of scheduling.
// Work is partitioned by the J_i fibers on staircase posets and by decision
// prefixes on the largest elements otherwise; merges happen in a fixed order.
template <class Acc, class Visit, class Merge>
Acc reduce_over_ideals(const GapPoset& poset, const EnumOptions& opt, Acc init, Visit visit,
                       Merge merge) {
    ensure_under_cap(poset.s(), poset.t(), opt.cap);

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int threads = opt.threads > 0 ? opt.threads : std::max(1, hw);

    if (threads == 1 || poset.size() == 0) {
        Acc acc = std::move(init);
        for_each_ideal(poset, [&](std::span<const long long> ideal) { visit(acc, ideal); });
        return acc;
    }

    if (poset.is_staircase() && poset.s() >= 2) {
        const long long s = poset.s();
        std::vector<Acc> slots(static_cast<std::size_t>(s), init);
        // hand out heavy fibers first; fiber i holds C_{i-1} * C_{s-i} ideals
        std::vector<long long> order(static_cast<std::size_t>(s));
        std::iota(order.begin(), order.end(), 1);
        std::vector<ExactInt> weight(static_cast<std::size_t>(s) + 1);
        for (long long i = 1; i <= s; ++i)
            weight[static_cast<std::size_t>(i)] = catalan(i - 1) * catalan(s - i);
        std::sort(order.begin(), order.end(), [&](long long a, long long b) {
            return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
        });

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= order.size()) return;
                const long long i = order[k];
                Acc acc = init;
                for_each_ideal_in_fiber(s, i,
                                        [&](std::span<const long long> ideal) { visit(acc, ideal); });
                slots[static_cast<std::size_t>(i - 1)] = std::move(acc);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<long long>(threads, s); ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        Acc acc = std::move(init);
        for (auto& slot : slots) merge(acc, std::move(slot));
        return acc;
    }

    detail::EnumScaffold sc(poset);
    int depth = 0;
    std::vector<std::uint64_t> tasks{0};
    while (static_cast<int>(tasks.size()) < 8 * threads && depth < sc.count() && depth < 62) {
        ++depth;
        tasks = detail::collect_prefixes(sc, depth);
    }

    std::vector<Acc> slots(tasks.size(), init);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        detail::DfsRunner runner(sc);
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            runner.load_prefix(tasks[k], depth);
            runner.run(depth, [&](std::span<const long long> ideal) { visit(slots[k], ideal); });
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    Acc acc = std::move(init);
    for (auto& slot : slots) merge(acc, std::move(slot));
    return acc;
}

// Materialized enumeration in canonical order.
inline std::vector<OrderIdeal> enumerate_ideals(const GapPoset& poset,
                                                const EnumOptions& opt = {}) {
    ensure_under_cap(poset.s(), poset.t(), opt.cap);
    std::vector<OrderIdeal> out;
    for_each_ideal(poset, [&](std::span<const long long> ideal) {
        out.push_back(OrderIdeal{poset.s(), poset.t(),
                                 std::vector<long long>(ideal.begin(), ideal.end())});
    });
    return out;
}

// Downward-closure test; foreign or duplicated elements are errors.
inline bool is_order_ideal(const GapPoset& poset, const std::vector<long long>& elements) {
    std::vector<char> member(static_cast<std::size_t>(poset.frobenius_number() + 1), 0);
    for (long long a : elements) {
        if (!poset.contains(a))
            throw NotAGapError("is_order_ideal: " + std::to_string(a) + " is not a gap of <" +
                               std::to_string(poset.s()) + "," + std::to_string(poset.t()) + ">");
        if (member[static_cast<std::size_t>(a)])
            throw std::invalid_argument("is_order_ideal: duplicate element " + std::to_string(a));
        member[static_cast<std::size_t>(a)] = 1;
    }
    for (long long a : elements)
        for (long long b : {a - poset.s(), a - poset.t()})
            if (poset.contains(b) && !member[static_cast<std::size_t>(b)]) return false;
    return true;
}

// Validated OrderIdeal from arbitrary element order.
inline OrderIdeal as_order_ideal(const GapPoset& poset, std::vector<long long> elements) {
    if (!is_order_ideal(poset, elements))
        throw std::invalid_argument("as_order_ideal: set is not downward closed");
    std::sort(elements.begin(), elements.end(), std::greater<>());
    return OrderIdeal{poset.s(), poset.t(), std::move(elements)};
}

// Least element of T_s missing from the ideal when that element has rank 0;
// s when the ideal contains all of rank 0 (including the full ideal).
inline long long least_missing_index(long long s, const std::vector<long long>& elements) {
    if (s < 1) throw std::invalid_argument("least_missing_index: s must be positive");
    std::vector<char> present(static_cast<std::size_t>(s), 0);
    for (long long a : elements)
        if (a <= s - 1) present[static_cast<std::size_t>(a)] = 1;
    for (long long v = 1; v <= s - 1; ++v)
        if (!present[static_cast<std::size_t>(v)]) return v;
    return s;
}

inline long long least_missing_index(long long s, const OrderIdeal& ideal) {
    return least_missing_index(s, ideal.elements);
}

// An ideal of T_s with least missing element i, minus the forced prefix
// {1..i-1}, factors into independent ideals of T_{i-1} and T_{s-i}.
struct IdealSplit {
    long long i = 0;
    OrderIdeal left;   // ideal of T_{i-1}
    OrderIdeal right;  // ideal of T_{s-i}
};

inline IdealSplit split_ideal(long long s, const OrderIdeal& ideal) {
    const long long i = least_missing_index(s, ideal);
    IdealSplit split{i, OrderIdeal{i - 1, i, {}}, OrderIdeal{s - i, s - i + 1, {}}};
    for (long long a : ideal.elements) {
        const long long r = a / (s + 1), k = a % (s + 1);
        if (r >= 1 && r + k <= i - 1) {
            split.left.elements.push_back((r - 1) * i + k);    // up-left of i
        } else if (k >= i + 1) {
            split.right.elements.push_back(r * (s - i + 1) + (k - i));  // right of i
        } else {
            // only the forced rank-0 prefix remains
            assert(r == 0 && k >= 1 && k <= i - 1);
        }
    }
    return split;
}

inline OrderIdeal reassemble(long long s, long long i, const OrderIdeal& left,
                             const OrderIdeal& right) {
    if (s < 1 || i < 1 || i > s) throw std::invalid_argument("reassemble: need 1 <= i <= s");
    if (left.s != i - 1 || left.t != i)
        throw std::invalid_argument("reassemble: left ideal does not live in T_{i-1}");
    if (right.s != s - i || right.t != s - i + 1)
        throw std::invalid_argument("reassemble: right ideal does not live in T_{s-i}");

    std::vector<long long> left_emb, right_emb;
    for (long long w : left.elements) {
        rank_in_Ts(i - 1, w);  // validates membership
        left_emb.push_back((w / i + 1) * (s + 1) + w % i);
    }
    for (long long w : right.elements) {
        rank_in_Ts(s - i, w);
        right_emb.push_back((w / (s - i + 1)) * (s + 1) + w % (s - i + 1) + i);
    }

    OrderIdeal out{s, s + 1, {}};
    std::merge(left_emb.begin(), left_emb.end(), right_emb.begin(), right_emb.end(),
               std::back_inserter(out.elements), std::greater<>());
    for (long long v = i - 1; v >= 1; --v) out.elements.push_back(v);
    return out;
}

inline OrderIdeal reassemble(long long s, const IdealSplit& split) {
    return reassemble(s, split.i, split.left, split.right);
}

}  // namespace stcores
