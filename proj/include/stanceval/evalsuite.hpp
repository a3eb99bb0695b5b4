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

/** @file evalsuite.hpp Multi-system scoring and leaderboard tables.
 *
 * evaluate_all() scores every system against one gold set with a single
 * weight scheme and attaches a competition rank ("1224") to each of the six
 * table columns. Systems whose predictions cannot be aligned with the gold
 * set are dropped and listed in the table metadata together with the reason.
 **/

#ifndef STANCEVAL_EVALSUITE_HPP
#define STANCEVAL_EVALSUITE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanceval/labels_io.hpp"
#include "stanceval/metrics.hpp"

namespace stanceval {

/// Named weight schemes: paper, mama-edha, upv and uniform (1/K, built on
/// demand for the schema at hand). Additional schemes can be registered.
class WeightSchemeRegistry {
public:
    WeightSchemeRegistry();

    void add(WeightScheme scheme);
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;

    /// Throws a configuration error for unknown names or a scheme that does
    /// not match the schema.
    WeightScheme resolve(std::string_view name, const LabelSchema& schema) const;

private:
    std::map<std::string, WeightScheme, std::less<>> schemes_;
};

/// "support=0.4,deny=0.4,query=0.15,comment=0.05" -> scheme named "custom".
WeightScheme parse_inline_weights(std::string_view spec);

struct SystemEntry {
    std::string name;
    LabeledSet predictions;
};

enum class MetricColumn { Accuracy, MacroF1, Gmr, Wauc, Wf1, Wf2 };

inline constexpr std::array<MetricColumn, 6> kMetricColumns{
    MetricColumn::Accuracy, MetricColumn::MacroF1, MetricColumn::Gmr,
    MetricColumn::Wauc,     MetricColumn::Wf1,     MetricColumn::Wf2,
};

std::string_view column_key(MetricColumn column) noexcept;    // acc, macro_f1, ...
std::string_view column_title(MetricColumn column) noexcept;  // ACC, macro-F1, ...
double column_value(const MetricReport& report, MetricColumn column) noexcept;

struct RankedRow {
    MetricReport report;
    std::array<int, kMetricColumns.size()> ranks{};  // indexed like kMetricColumns
    std::size_t missing_in_pred = 0;
    std::size_t extra_in_pred = 0;

    int rank(MetricColumn column) const noexcept { return ranks[static_cast<std::size_t>(column)]; }
};

struct DroppedSystem {
    std::string name;
    std::string reason;
};

struct RankedTable {
    std::string gold;
    std::vector<std::string> classes;
    std::string scheme;
    std::map<std::string, double> weights;
    AlignMode mode = AlignMode::Strict;
    std::vector<double> betas;
    std::vector<RankedRow> rows;  // input order
    std::vector<DroppedSystem> dropped;
    std::vector<std::string> notes;
};

struct EvalOptions {
    AlignMode mode = AlignMode::Strict;
    AbsentClassPolicy policy = AbsentClassPolicy::Strict;
    std::vector<double> betas = kDefaultBetas;
};

RankedTable evaluate_all(const LabeledSet& gold, std::span<const SystemEntry> systems, const WeightScheme& scheme,
                         const LabelSchema& schema, const EvalOptions& options = {});

/// Descending competition ranking at full precision: [0.9, 0.7, 0.7, 0.5] -> [1, 2, 2, 4].
std::vector<int> rank_column(std::span<const double> scores);

/// Recompute every column's ranks from the rows' full-precision scores.
void assign_ranks(RankedTable& table);

enum class Normalize { None, Row };

Normalize parse_normalize(std::string_view name);

struct ConfusionReport {
    std::string system;
    std::vector<std::string> classes;
    std::vector<std::vector<std::uint64_t>> counts;
    std::optional<std::vector<std::vector<double>>> row_normalized;  // present for Normalize::Row
};

ConfusionReport confusion_report(const ConfusionMatrix& cm, std::string system, Normalize normalize);

ConfusionReport confmat_report(const LabeledSet& gold, const SystemEntry& system, const LabelSchema& schema,
                               Normalize normalize, AlignMode mode = AlignMode::Strict);

}  // namespace stanceval

#endif  // STANCEVAL_EVALSUITE_HPP
