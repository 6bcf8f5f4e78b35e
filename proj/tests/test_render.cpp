#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "stcores/render.hpp"
#include "test_support.hpp"

using stcores::Partition;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// the sequence of integer tokens on rows that carry labels
std::vector<std::vector<long long>> label_rows(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    for (const std::string& line : lines_of(text)) {
        std::vector<long long> labels;
        std::string digits;
        for (char c : line + " ") {
            if (c >= '0' && c <= '9') {
                digits += c;
            } else if (!digits.empty()) {
                labels.push_back(std::stoll(digits));
                digits.clear();
            }
        }
        if (!labels.empty()) rows.push_back(labels);
    }
    return rows;
}

}  // namespace

TEST_CASE("young diagram hooks") {
    CHECK(stcores::render_young(Partition::parse("5,3,3,2")) ==
          "8 7 5 2 1\n"
          "5 4 2\n"
          "4 3 1\n"
          "2 1");
    CHECK(stcores::render_young(Partition::parse("1")) == "1");
    CHECK(stcores::render_young(Partition()) == "");
    CHECK(stcores::render_young(Partition::parse("10,6,3")) ==
          "12 11 10  8  7  6  4  3  2  1\n"
          " 7  6  5  3  2  1\n"
          " 3  2  1");
}

TEST_CASE("staircase hasse triangle") {
    CHECK(stcores::render_hasse(stcores::build_gap_poset(2, 3)) == "1");
    CHECK(stcores::render_hasse(stcores::build_gap_poset(3, 4)) ==
          "  5\n"
          " / \\\n"
          "1   2");

    const std::string t5 = stcores::render_hasse(stcores::build_gap_poset(5, 6));
    CHECK(label_rows(t5) == std::vector<std::vector<long long>>{
                                {19}, {13, 14}, {7, 8, 9}, {1, 2, 3, 4}});
    CHECK(t5.find('/') != std::string::npos);
    CHECK(t5.find('\\') != std::string::npos);

    CHECK(stcores::render_hasse(stcores::build_gap_poset(1, 2)) == "");
}

TEST_CASE("layered hasse for general posets") {
    CHECK(stcores::render_hasse(stcores::build_gap_poset(3, 5)) ==
          "  7\n"
          "  |\\\n"
          "  4 \\\n"
          "  |  \\\n"
          "  1   2");

    const std::string p37 = stcores::render_hasse(stcores::build_gap_poset(3, 7));
    CHECK(label_rows(p37) == std::vector<std::vector<long long>>{
                                 {11}, {8}, {4, 5}, {1, 2}});
}
