#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "stcores/errors.hpp"

namespace stcores {

// All counts, sums and closed-form values are exact; doubles never appear.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

// Quotient a/b, throwing unless b divides a exactly.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
    if (b == 0) throw DivisibilityError("exact_div: division by zero");
    ExactInt q = a / b;
    if (q * b != a)
        throw DivisibilityError("exact_div: " + to_decimal(b) + " does not divide " + to_decimal(a));
    return q;
}

// binomial(n, k) by the multiplicative formula with a running exact division;
// each prefix product is itself a binomial coefficient, so every step divides.
// Memoized per (n, k) within a thread.
inline ExactInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (k == 0) return 1;

    thread_local std::unordered_map<std::uint64_t, ExactInt> memo;
    const bool memoizable = n < (1LL << 43) && k < (1LL << 20);
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 20) | static_cast<std::uint64_t>(k);
    if (memoizable)
        if (auto it = memo.find(key); it != memo.end()) return it->second;

    ExactInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r = exact_div(r, i);
    }
    if (!memoizable) return r;
    return memo.emplace(key, std::move(r)).first->second;
}

inline ExactInt catalan(long long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    return exact_div(binomial(2 * n, n), n + 1);
}

// Rational in lowest terms with positive denominator.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(ExactInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(ExactInt n, ExactInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DivisibilityError("ExactRatio: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        ExactInt g = boost::multiprecision::gcd(num_ < 0 ? ExactInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    const ExactInt& num() const { return num_; }
    const ExactInt& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }
    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    std::string to_string() const {
        return is_integer() ? to_decimal(num_) : to_decimal(num_) + "/" + to_decimal(den_);
    }

private:
    ExactInt num_, den_;
};

// Streaming exact sum: batches small addends in an int64 and spills into the
// big integer only on overflow, so hot enumeration loops stay cheap.
class ExactAccumulator {
public:
    void add(long long v) {
        long long next;
        if (__builtin_add_overflow(partial_, v, &next)) {
            total_ += partial_;
            partial_ = v;
        } else {
            partial_ = next;
        }
    }
    void merge(const ExactAccumulator& other) {
        total_ += other.total_;
        total_ += other.partial_;
    }
    ExactInt value() const { return total_ + partial_; }

private:
    long long partial_ = 0;
    ExactInt total_ = 0;
};

}  // namespace stcores
