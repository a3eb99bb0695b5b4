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

#ifndef STANCEVAL_LABELS_IO_HPP
#define STANCEVAL_LABELS_IO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stanceval/metrics.hpp"

namespace stanceval {

enum class LabelFormat { Tsv, JsonMap, RumourEval2019 };

/// "tsv", "json-map" or "rumoureval2019"; anything else is a configuration error.
LabelFormat parse_label_format(std::string_view name);
std::string_view to_string(LabelFormat format) noexcept;

/// Instance id -> canonical label. Iteration order is ascending id.
class LabeledSet {
public:
    using Entries = std::map<std::string, std::string>;

    /// Labels are canonicalized; empty ids or an empty set are rejected.
    LabeledSet(std::string source, Entries entries);

    const std::string& source() const noexcept { return source_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    bool operator==(const LabeledSet&) const = default;

private:
    std::string source_;
    Entries entries_;
};

LabeledSet parse_labels(std::istream& in, LabelFormat format, std::string source);
LabeledSet parse_labels(const std::filesystem::path& path, LabelFormat format);

/// Serializers producing input that parse_labels reads back unchanged.
std::string to_tsv(const LabeledSet& set);
std::string to_json_map(const LabeledSet& set);

enum class AlignMode { Strict, Intersect };

AlignMode parse_align_mode(std::string_view name);
std::string_view to_string(AlignMode mode) noexcept;

struct AlignedPairs {
    std::vector<std::string> ids;   // ascending
    std::vector<std::string> gold;
    std::vector<std::string> pred;
    std::size_t missing_in_pred = 0;  // gold ids without a prediction
    std::size_t extra_in_pred = 0;    // predicted ids absent from gold
};

/// Pair gold and predicted labels by id. Strict mode requires identical id
/// sets; intersect mode keeps the common ids and counts the rest.
AlignedPairs align(const LabeledSet& gold, const LabeledSet& pred, const LabelSchema& schema,
                   AlignMode mode = AlignMode::Strict);

struct ClassCount {
    std::string name;
    std::uint64_t count = 0;
    double fraction = 0.0;
};

struct ClassDistribution {
    std::string source;
    std::vector<ClassCount> classes;  // schema order
    std::uint64_t total = 0;
};

ClassDistribution class_distribution(const LabeledSet& labels, const LabelSchema& schema);

}  // namespace stanceval

#endif  // STANCEVAL_LABELS_IO_HPP
