#pragma once

#include <cassert>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "stcores/errors.hpp"

namespace stcores {

// Integer partition with weakly decreasing positive parts. The empty
// partition prints as "-".
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            size_ += parts_[i];
        }
    }

    static Partition parse(std::string_view text) {
        if (text.empty() || text == "-") return {};
        std::vector<long long> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("Partition: cannot parse part '" + std::string(tok) + "'");
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<long long>& parts() const { return parts_; }
    long long num_parts() const { return static_cast<long long>(parts_.size()); }
    long long size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const {
        if (parts_.empty()) return "-";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<long long> parts_;
    long long size_ = 0;
};

using HookGrid = std::vector<std::vector<long long>>;

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<long long> cols(static_cast<std::size_t>(p.parts()[0]), 0);
    for (long long part : p.parts())
        for (long long j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

// hook(i,j) = parts[i] + conj[j] - i - j - 1 (0-based): arm + leg + 1.
inline HookGrid hook_lengths(const Partition& p) {
    HookGrid grid(static_cast<std::size_t>(p.num_parts()));
    if (p.empty()) return grid;
    const Partition conj = conjugate(p);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const long long row = p.parts()[i];
        grid[i].resize(static_cast<std::size_t>(row));
        for (long long j = 0; j < row; ++j)
            grid[i][static_cast<std::size_t>(j)] =
                row + conj.parts()[static_cast<std::size_t>(j)] - static_cast<long long>(i) - j - 1;
    }
    return grid;
}

// First-column hook lengths, strictly decreasing: parts[k] + (num_parts-1-k).
inline std::vector<long long> first_column_hooks(const Partition& p) {
    const long long j = p.num_parts();
    std::vector<long long> hooks(static_cast<std::size_t>(j));
    for (long long k = 0; k < j; ++k)
        hooks[static_cast<std::size_t>(k)] = p.parts()[static_cast<std::size_t>(k)] + (j - 1 - k);
    return hooks;
}

// True iff no cell's hook length equals s. Debug builds also assert the
// classical equivalence: s appears as a hook iff some multiple of s does.
inline bool is_s_core(const Partition& p, long long s) {
    if (s < 1) throw std::invalid_argument("is_s_core: s must be positive");
    const HookGrid grid = hook_lengths(p);
    bool has_s = false;
    for (const auto& row : grid)
        for (long long h : row)
            if (h == s) { has_s = true; break; }
#ifndef NDEBUG
    bool has_multiple = false;
    for (const auto& row : grid)
        for (long long h : row)
            if (h % s == 0) { has_multiple = true; break; }
    assert(has_s == has_multiple);
#endif
    return !has_s;
}

inline bool is_st_core(const Partition& p, long long s, long long t) {
    return is_s_core(p, s) && is_s_core(p, t);
}

}  // namespace stcores
