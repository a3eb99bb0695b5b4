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

#include "stanceval/evalsuite.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "stanceval/error.hpp"

namespace stanceval {

WeightSchemeRegistry::WeightSchemeRegistry() {
    add(WeightScheme("paper", {{"support", 0.40}, {"deny", 0.40}, {"query", 0.15}, {"comment", 0.05}}));
    add(WeightScheme("mama-edha", {{"support", 0.157}, {"deny", 0.396}, {"query", 0.399}, {"comment", 0.048}}));
    add(WeightScheme("upv", {{"support", 0.2}, {"deny", 0.35}, {"query", 0.35}, {"comment", 0.1}}));
}

void WeightSchemeRegistry::add(WeightScheme scheme) {
    if (scheme.name() == "uniform" || scheme.name() == "custom") {
        throw config_error(fmt::format("scheme name '{}' is reserved", scheme.name()));
    }
    auto name = scheme.name();
    schemes_.insert_or_assign(std::move(name), std::move(scheme));
}

bool WeightSchemeRegistry::contains(std::string_view name) const {
    return name == "uniform" || schemes_.find(name) != schemes_.end();
}

std::vector<std::string> WeightSchemeRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, scheme] : schemes_) out.push_back(name);
    out.emplace_back("uniform");
    return out;
}

WeightScheme WeightSchemeRegistry::resolve(std::string_view name, const LabelSchema& schema) const {
    if (name == "uniform") return WeightScheme::uniform(schema);
    const auto it = schemes_.find(name);
    if (it == schemes_.end()) {
        throw config_error(fmt::format("unknown weight scheme '{}' (known: {})", name, fmt::join(names(), ", ")));
    }
    it->second.for_schema(schema);
    return it->second;
}

WeightScheme parse_inline_weights(std::string_view spec) {
    std::map<std::string, double> weights;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);

        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw config_error(fmt::format("weight '{}' must have the form class=value", item));
        }
        const auto cls = canonical_label(item.substr(0, eq));
        const auto value_text = canonical_label(item.substr(eq + 1));
        double value = 0.0;
        const auto* end = value_text.data() + value_text.size();
        const auto [ptr, ec] = std::from_chars(value_text.data(), end, value);
        if (ec != std::errc{} || ptr != end || value_text.empty()) {
            throw config_error(fmt::format("weight for '{}' is not a number: '{}'", cls, item.substr(eq + 1)));
        }
        if (!weights.emplace(cls, value).second) {
            throw config_error(fmt::format("class '{}' is given two weights", cls));
        }
    }
    return WeightScheme("custom", weights);
}

std::string_view column_key(MetricColumn column) noexcept {
    switch (column) {
        case MetricColumn::Accuracy: return "acc";
        case MetricColumn::MacroF1: return "macro_f1";
        case MetricColumn::Gmr: return "gmr";
        case MetricColumn::Wauc: return "wauc";
        case MetricColumn::Wf1: return "wf1";
        case MetricColumn::Wf2: return "wf2";
    }
    return "";
}

std::string_view column_title(MetricColumn column) noexcept {
    switch (column) {
        case MetricColumn::Accuracy: return "ACC";
        case MetricColumn::MacroF1: return "macro-F1";
        case MetricColumn::Gmr: return "GMR";
        case MetricColumn::Wauc: return "wAUC";
        case MetricColumn::Wf1: return "wF1";
        case MetricColumn::Wf2: return "wF2";
    }
    return "";
}

double column_value(const MetricReport& report, MetricColumn column) noexcept {
    switch (column) {
        case MetricColumn::Accuracy: return report.accuracy;
        case MetricColumn::MacroF1: return report.macro_f1;
        case MetricColumn::Gmr: return report.gmr;
        case MetricColumn::Wauc: return report.wauc;
        case MetricColumn::Wf1: return report.wf1;
        case MetricColumn::Wf2: return report.wf2;
    }
    return 0.0;
}

std::vector<int> rank_column(std::span<const double> scores) {
    std::vector<int> ranks;
    ranks.reserve(scores.size());
    for (double score : scores) {
        int better = 0;
        for (double other : scores) {
            if (other > score) ++better;
        }
        ranks.push_back(better + 1);
    }
    return ranks;
}

void assign_ranks(RankedTable& table) {
    for (std::size_t col = 0; col < kMetricColumns.size(); ++col) {
        std::vector<double> scores;
        scores.reserve(table.rows.size());
        for (const auto& row : table.rows) scores.push_back(column_value(row.report, kMetricColumns[col]));
        const auto ranks = rank_column(scores);
        for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].ranks[col] = ranks[i];
    }
}

RankedTable evaluate_all(const LabeledSet& gold, std::span<const SystemEntry> systems, const WeightScheme& scheme,
                         const LabelSchema& schema, const EvalOptions& options) {
    if (systems.empty()) throw config_error("no systems to evaluate");
    scheme.for_schema(schema);

    std::set<std::string> names;
    for (const auto& system : systems) {
        if (!names.insert(system.name).second) {
            throw config_error(fmt::format("system name '{}' is used twice", system.name));
        }
    }

    const auto dist = class_distribution(gold, schema);
    if (options.policy == AbsentClassPolicy::Strict) {
        for (const auto& c : dist.classes) {
            if (c.count == 0) {
                throw absent_class_error(fmt::format(
                    "{}: class '{}' has no gold instances; recall is undefined (use lenient mode to score it as 0)",
                    gold.source(), c.name));
            }
        }
    }

    RankedTable table;
    table.gold = gold.source();
    table.classes = schema.classes();
    table.scheme = scheme.name();
    table.weights = scheme.weights();
    table.mode = options.mode;
    table.betas = options.betas;

    for (const auto& system : systems) {
        try {
            const auto pairs = align(gold, system.predictions, schema, options.mode);
            const auto cm = confusion_from_pairs(pairs.gold, pairs.pred, schema);
            RankedRow row{
                .report = all_metrics(cm, scheme, options.betas, options.policy, system.name),
                .ranks = {},
                .missing_in_pred = pairs.missing_in_pred,
                .extra_in_pred = pairs.extra_in_pred,
            };
            table.rows.push_back(std::move(row));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Configuration) throw;
            table.dropped.push_back({system.name, e.what()});
        }
    }

    if (table.rows.empty()) {
        std::vector<std::string> reasons;
        for (const auto& d : table.dropped) reasons.push_back(fmt::format("{}: {}", d.name, d.reason));
        throw empty_evaluation_error(fmt::format("no system could be evaluated\n  {}", fmt::join(reasons, "\n  ")));
    }
    assign_ranks(table);
    return table;
}

Normalize parse_normalize(std::string_view name) {
    if (name == "none") return Normalize::None;
    if (name == "row") return Normalize::Row;
    throw config_error(fmt::format("unknown normalization '{}' (expected none or row)", name));
}

ConfusionReport confusion_report(const ConfusionMatrix& cm, std::string system, Normalize normalize) {
    ConfusionReport report{
        .system = std::move(system),
        .classes = cm.schema().classes(),
        .counts = cm.counts(),
        .row_normalized = std::nullopt,
    };
    if (normalize == Normalize::Row) report.row_normalized = cm.row_normalized();
    return report;
}

ConfusionReport confmat_report(const LabeledSet& gold, const SystemEntry& system, const LabelSchema& schema,
                               Normalize normalize, AlignMode mode) {
    const auto pairs = align(gold, system.predictions, schema, mode);
    return confusion_report(confusion_from_pairs(pairs.gold, pairs.pred, schema), system.name, normalize);
}

}  // namespace stanceval
