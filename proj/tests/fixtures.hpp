// Copyright 2026 The stanceval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STANCEVAL_TESTS_FIXTURES_HPP
#define STANCEVAL_TESTS_FIXTURES_HPP

#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "stanceval/labels_io.hpp"

namespace fixtures {

inline bool near(double actual, double expected, double tolerance) {
    return std::abs(actual - expected) <= tolerance;
}

inline const std::vector<std::string> kRumourClasses{"support", "deny", "query", "comment"};

/// Rows gold S,D,Q,C; columns predicted S,D,Q,C.
inline const std::vector<std::vector<std::uint64_t>> kM20{
    {3, 0, 0, 1},
    {0, 2, 0, 2},
    {0, 0, 4, 0},
    {1, 0, 1, 6},
};

// Frozen from an exact-fraction brute-force pass over the 20 label pairs.
constexpr double kM20Accuracy = 15.0 / 20.0;
constexpr double kM20MacroF1 = 1843.0 / 2448.0;  // 0.752859...
constexpr double kM20Gmr = 0.7282376575609851;  // (9/32)^(1/4)
constexpr double kM20Wauc = 105.0 / 128.0;      // 0.8203125
constexpr double kM20Wf1 = 25.0 / 34.0;         // 0.735294...
constexpr double kM20Wf2 = 9062.0 / 12915.0;    // 0.701664...

struct Pairs {
    std::vector<std::string> gold;
    std::vector<std::string> pred;
};

/// Expand a count matrix into label pairs, row-major.
inline Pairs expand(const std::vector<std::vector<std::uint64_t>>& counts,
                    const std::vector<std::string>& classes = kRumourClasses) {
    Pairs out;
    for (std::size_t g = 0; g < counts.size(); ++g)
        for (std::size_t p = 0; p < counts[g].size(); ++p)
            for (std::uint64_t i = 0; i < counts[g][p]; ++i) {
                out.gold.push_back(classes[g]);
                out.pred.push_back(classes[p]);
            }
    return out;
}

inline std::string id_for(std::size_t i) { return fmt::format("t{:05d}", i); }

inline stanceval::LabeledSet labeled(const std::vector<std::string>& labels, const std::string& source) {
    stanceval::LabeledSet::Entries entries;
    for (std::size_t i = 0; i < labels.size(); ++i) entries.emplace(id_for(i), labels[i]);
    return stanceval::LabeledSet(source, std::move(entries));
}

/// Gold set with the given per-class counts, in class order.
inline stanceval::LabeledSet gold_with_counts(const std::vector<std::uint64_t>& counts,
                                              const std::vector<std::string>& classes = kRumourClasses) {
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < counts.size(); ++c)
        for (std::uint64_t i = 0; i < counts[c]; ++i) labels.push_back(classes[c]);
    return labeled(labels, "gold");
}

// Reconstructed from the published baseline accuracies: each set reproduces
// the three baseline rows of its table at 3-decimal display precision.
inline const std::vector<std::uint64_t> kGold2017Counts{94, 71, 106, 778};
inline const std::vector<std::uint64_t> kGold2019Counts{70, 45, 41, 656};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / fmt::format("stanceval-{}-{}", name, ::getpid());
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace fixtures

#endif  // STANCEVAL_TESTS_FIXTURES_HPP
