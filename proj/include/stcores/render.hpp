#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "stcores/partition.hpp"
#include "stcores/poset.hpp"

namespace stcores {

namespace detail {

class AsciiCanvas {
public:
    // Edges yield to whatever is already drawn, so crossings keep the first
    // stroke and never punch holes in labels.
    void put_soft(long long y, long long x, char c) {
        if (y < 0 || x < 0) return;
        reserve(y, x);
        char& cell = rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
        if (cell == ' ') cell = c;
    }

    void put_label(long long y, long long x_center, const std::string& text) {
        long long start = x_center - (static_cast<long long>(text.size()) - 1) / 2;
        if (start < 0) start = 0;
        reserve(y, start + static_cast<long long>(text.size()) - 1);
        for (std::size_t i = 0; i < text.size(); ++i)
            rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(start) + i] = text[i];
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::string row = rows_[i];
            while (!row.empty() && row.back() == ' ') row.pop_back();
            if (i) out += '\n';
            out += row;
        }
        return out;
    }

private:
    void reserve(long long y, long long x) {
        if (static_cast<long long>(rows_.size()) <= y) rows_.resize(static_cast<std::size_t>(y) + 1);
        for (auto& row : rows_)
            if (static_cast<long long>(row.size()) <= x) row.resize(static_cast<std::size_t>(x) + 1, ' ');
    }

    std::vector<std::string> rows_;
};

// Label pitch: an even center-to-center distance wide enough that neighbours
// never touch.
inline long long label_pitch(long long max_label_width) {
    long long w = max_label_width + 3;
    if (w % 2) ++w;
    return w;
}

inline long long max_gap_width(const GapPoset& poset) {
    long long widest = 1;
    for (long long g : poset.gaps())
        widest = std::max(widest, static_cast<long long>(std::to_string(g).size()));
    return widest;
}

// T_s draws as a triangle: rank r holds v(r,k) = r(s+1)+k for k = 1..s-1-r,
// apex on top, each node joined to the two nodes under it.
inline std::string render_hasse_staircase(const GapPoset& poset) {
    if (poset.size() == 0) return "";
    const long long s = poset.s();
    const long long w = label_pitch(max_gap_width(poset));
    const long long half = w / 2;
    AsciiCanvas canvas;
    for (long long r = s - 2; r >= 0; --r) {
        const long long y = (s - 2 - r) * half;
        for (long long k = 1; k <= s - 1 - r; ++k) {
            const long long x = (k - 1) * w + r * half;
            canvas.put_label(y, x, std::to_string(r * (s + 1) + k));
            if (r == 0) continue;
            for (long long j = 1; j < half; ++j) {
                canvas.put_soft(y + j, x - j, '/');
                canvas.put_soft(y + j, x + j, '\\');
            }
        }
    }
    return canvas.str();
}

inline std::string render_hasse_layered(const GapPoset& poset) {
    if (poset.size() == 0) return "";
    const auto& gaps = poset.gaps();

    // Longest chain below each element; ascending order makes this one pass.
    std::unordered_map<long long, long long> height;
    long long max_height = 0;
    for (long long g : gaps) {
        long long h = 0;
        for (long long below : poset.covers_down(g)) h = std::max(h, height.at(below) + 1);
        height[g] = h;
        max_height = std::max(max_height, h);
    }

    std::vector<std::vector<long long>> layers(static_cast<std::size_t>(max_height) + 1);
    for (long long g : gaps) layers[static_cast<std::size_t>(height.at(g))].push_back(g);

    const long long w = label_pitch(max_gap_width(poset));
    const long long half = w / 2;
    const long long stride = std::max<long long>(2, half);

    std::unordered_map<long long, std::pair<long long, long long>> pos;
    for (long long h = 0; h <= max_height; ++h) {
        const auto& layer = layers[static_cast<std::size_t>(h)];
        const long long y = (max_height - h) * stride;
        for (std::size_t i = 0; i < layer.size(); ++i)
            pos[layer[i]] = {y, half + static_cast<long long>(i) * w};
    }

    AsciiCanvas canvas;
    for (long long g : gaps) {
        const auto [ya, xa] = pos.at(g);
        for (long long below : poset.covers_down(g)) {
            const auto [yb, xb] = pos.at(below);
            const long long dy = yb - ya;
            long long prev_x = xa;
            for (long long step = 1; step < dy; ++step) {
                const long long num = (xb - xa) * step * 2 + dy;
                const long long x = xa + (num >= 0 ? num / (2 * dy) : -((-num + 2 * dy - 1) / (2 * dy)));
                canvas.put_soft(ya + step, x, x > prev_x ? '\\' : x < prev_x ? '/' : '|');
                prev_x = x;
            }
        }
    }
    for (long long g : gaps) {
        const auto [y, x] = pos.at(g);
        canvas.put_label(y, x, std::to_string(g));
    }
    return canvas.str();
}

}  // namespace detail

inline std::string render_hasse(const GapPoset& poset) {
    if (poset.is_staircase()) return detail::render_hasse_staircase(poset);
    return detail::render_hasse_layered(poset);
}

// Hook lengths in the shape of the diagram, one row per part, columns aligned.
inline std::string render_young(const Partition& p) {
    if (p.empty()) return "";
    const HookGrid grid = hook_lengths(p);
    long long widest = 1;
    for (const auto& row : grid)
        for (long long h : row) widest = std::max(widest, static_cast<long long>(std::to_string(h).size()));
    std::string out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) out += '\n';
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            std::string cell = std::to_string(grid[i][j]);
            if (j) out += ' ';
            out.append(static_cast<std::size_t>(widest) - cell.size(), ' ');
            out += cell;
        }
    }
    return out;
}

}  // namespace stcores
