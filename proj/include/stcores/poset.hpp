#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <vector>

#include "stcores/errors.hpp"
#include "stcores/exact.hpp"

namespace stcores {

// Poset P_(s,t) of gaps of the numerical semigroup <s,t> for coprime s,t,
// ordered by: a covers b iff a - b is s or t. Empty when s = 1.
class GapPoset {
public:
    GapPoset() = default;

    long long s() const { return s_; }
    long long t() const { return t_; }
    bool is_staircase() const { return t_ == s_ + 1; }

    // Largest gap, -1 when there are none.
    long long frobenius_number() const { return frob_; }

    const std::vector<long long>& gaps() const { return gaps_; }  // ascending
    long long size() const { return static_cast<long long>(gaps_.size()); }

    bool contains(long long v) const {
        return v >= 1 && v <= frob_ && is_gap_[static_cast<std::size_t>(v)];
    }

    // The at most two elements covered by a (a-s and a-t when they are gaps).
    std::vector<long long> covers_down(long long a) const {
        if (!contains(a)) throw NotAGapError("covers_down: " + std::to_string(a) + " is not a gap");
        std::vector<long long> out;
        if (contains(a - s_)) out.push_back(a - s_);
        if (contains(a - t_)) out.push_back(a - t_);
        return out;
    }

private:
    friend GapPoset build_gap_poset(long long s, long long t);

    long long s_ = 0, t_ = 0, frob_ = -1;
    std::vector<long long> gaps_;
    std::vector<char> is_gap_;
};

// Exact Frobenius number s*t - s - t (equals -1 when s = 1).
inline ExactInt frobenius(long long s, long long t) {
    if (s < 1 || t < 1) throw std::invalid_argument("frobenius: s and t must be positive");
    if (std::gcd(s, t) != 1)
        throw NotCoprimeError("frobenius: gcd(" + std::to_string(s) + "," + std::to_string(t) + ") != 1");
    return ExactInt(s) * t - s - t;
}

inline GapPoset build_gap_poset(long long s, long long t) {
    if (s > t) std::swap(s, t);
    if (s == 0 && t == 1) {  // T_0, the empty staircase poset
        GapPoset p;
        p.t_ = 1;
        return p;
    }
    if (s < 1 || t < 1) throw std::invalid_argument("build_gap_poset: s and t must be positive");
    if (std::gcd(s, t) != 1)
        throw NotCoprimeError("build_gap_poset: gcd(" + std::to_string(s) + "," +
                              std::to_string(t) + ") != 1");

    GapPoset p;
    p.s_ = s;
    p.t_ = t;
    if (s == 1) return p;  // <1,t> covers every nonnegative integer

    const long long frob = s * t - s - t;
    if (frob > 200'000'000LL)
        throw std::length_error("build_gap_poset: poset too large to materialize");
    p.frob_ = frob;

    // representability sieve: rep(n) iff n = 0 or rep(n-s) or rep(n-t)
    std::vector<char> rep(static_cast<std::size_t>(frob) + 1, 0);
    rep[0] = 1;
    for (long long n = 1; n <= frob; ++n)
        rep[static_cast<std::size_t>(n)] =
            (n >= s && rep[static_cast<std::size_t>(n - s)]) ||
            (n >= t && rep[static_cast<std::size_t>(n - t)]);

    p.is_gap_.assign(static_cast<std::size_t>(frob) + 1, 0);
    for (long long n = 1; n <= frob; ++n)
        if (!rep[static_cast<std::size_t>(n)]) {
            p.is_gap_[static_cast<std::size_t>(n)] = 1;
            p.gaps_.push_back(n);
        }
    assert(static_cast<long long>(p.gaps_.size()) == (s - 1) * (t - 1) / 2);
    return p;
}

// T_s = P_(s,s+1), the staircase poset; s = 0 and s = 1 give the empty poset.
inline GapPoset build_staircase_poset(long long s) {
    if (s < 0) throw std::invalid_argument("build_staircase_poset: negative s");
    return build_gap_poset(s, s + 1);
}

// Rank of a gap of <s,s+1>: the r in a = r(s+1) + k with 1 <= k <= s-1-r.
inline long long rank_in_Ts(long long s, long long a) {
    if (s >= 1 && a >= 1) {
        const long long r = a / (s + 1), k = a % (s + 1);
        if (k >= 1 && k + r <= s - 1) return r;
    }
    throw NotAGapError("rank_in_Ts: " + std::to_string(a) + " is not a gap of <" +
                       std::to_string(s) + "," + std::to_string(s + 1) + ">");
}

// Down-closed subset of a gap poset; elements kept strictly decreasing.
struct OrderIdeal {
    long long s = 0, t = 0;
    std::vector<long long> elements;

    friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
        return a.s == b.s && a.t == b.t && a.elements == b.elements;
    }
    friend bool operator!=(const OrderIdeal& a, const OrderIdeal& b) { return !(a == b); }
};

inline std::string to_string(const OrderIdeal& ideal) {
    if (ideal.elements.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < ideal.elements.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ideal.elements[i]);
    }
    return out;
}

// Downward closure of the given generators.
inline OrderIdeal principal_ideal(const GapPoset& poset, const std::vector<long long>& generators) {
    std::vector<char> seen(static_cast<std::size_t>(poset.frobenius_number() + 1), 0);
    std::vector<long long> stack;
    for (long long g : generators) {
        if (!poset.contains(g))
            throw NotAGapError("principal_ideal: generator " + std::to_string(g) + " is not a gap");
        if (!seen[static_cast<std::size_t>(g)]) {
            seen[static_cast<std::size_t>(g)] = 1;
            stack.push_back(g);
        }
    }
    OrderIdeal ideal{poset.s(), poset.t(), {}};
    while (!stack.empty()) {
        const long long a = stack.back();
        stack.pop_back();
        ideal.elements.push_back(a);
        for (long long b : {a - poset.s(), a - poset.t()})
            if (poset.contains(b) && !seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = 1;
                stack.push_back(b);
            }
    }
    std::sort(ideal.elements.begin(), ideal.elements.end(), std::greater<>());
    return ideal;
}

}  // namespace stcores
