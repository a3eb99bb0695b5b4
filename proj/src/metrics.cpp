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

#include "stanceval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "stanceval/error.hpp"

namespace stanceval {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Duplicate: return "duplicate id";
        case ErrorKind::Schema: return "schema error";
        case ErrorKind::Alignment: return "alignment error";
        case ErrorKind::Degenerate: return "degenerate input";
        case ErrorKind::AbsentClass: return "absent class";
        case ErrorKind::Configuration: return "configuration error";
        case ErrorKind::EmptyEvaluation: return "empty evaluation";
    }
    return "error";
}

std::string canonical_label(std::string_view label) {
    auto is_space = [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
    };
    while (!label.empty() && is_space(label.front())) label.remove_prefix(1);
    while (!label.empty() && is_space(label.back())) label.remove_suffix(1);
    std::string out(label);
    for (char& ch : out) {
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    }
    return out;
}

// ---------------------------------------------------------------------------
// LabelSchema

LabelSchema::LabelSchema(std::vector<std::string> classes) {
    if (classes.size() < 2) {
        throw config_error(fmt::format("a label schema needs at least 2 classes, got {}", classes.size()));
    }
    std::set<std::string> seen;
    classes_.reserve(classes.size());
    for (const auto& raw : classes) {
        auto name = canonical_label(raw);
        if (name.empty()) throw config_error("label schema contains an empty class name");
        if (!seen.insert(name).second) {
            throw config_error(fmt::format("label schema lists class '{}' twice", name));
        }
        classes_.push_back(std::move(name));
    }
}

LabelSchema LabelSchema::rumoureval() {
    return LabelSchema({"support", "deny", "query", "comment"});
}

std::optional<std::size_t> LabelSchema::index_of(std::string_view label) const {
    const auto name = canonical_label(label);
    const auto it = std::find(classes_.begin(), classes_.end(), name);
    if (it == classes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t LabelSchema::require_index(std::string_view label) const {
    if (auto index = index_of(label)) return *index;
    throw schema_error(fmt::format("label '{}' is not one of: {}", label, fmt::join(classes_, ", ")));
}

// ---------------------------------------------------------------------------
// ConfusionMatrix

ConfusionMatrix::ConfusionMatrix(LabelSchema schema)
    : schema_(std::move(schema)), cells_(schema_.size() * schema_.size(), 0) {}

ConfusionMatrix::ConfusionMatrix(LabelSchema schema,
                                 const std::vector<std::vector<std::uint64_t>>& counts)
    : ConfusionMatrix(std::move(schema)) {
    const auto k = size();
    if (counts.size() != k) {
        throw config_error(fmt::format("confusion matrix has {} rows, schema has {} classes", counts.size(), k));
    }
    for (std::size_t g = 0; g < k; ++g) {
        if (counts[g].size() != k) {
            throw config_error(fmt::format("confusion matrix row {} has {} columns, expected {}", g, counts[g].size(), k));
        }
        for (std::size_t p = 0; p < k; ++p) add(g, p, counts[g][p]);
    }
}

void ConfusionMatrix::add(std::size_t gold, std::size_t pred, std::uint64_t count) {
    const auto k = size();
    if (gold >= k || pred >= k) {
        throw config_error(fmt::format("confusion matrix index ({}, {}) out of range for K={}", gold, pred, k));
    }
    cells_[gold * k + pred] += count;
    total_ += count;
}

std::uint64_t ConfusionMatrix::at(std::size_t gold, std::size_t pred) const {
    const auto k = size();
    if (gold >= k || pred >= k) {
        throw config_error(fmt::format("confusion matrix index ({}, {}) out of range for K={}", gold, pred, k));
    }
    return cells_[gold * k + pred];
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t gold) const {
    std::uint64_t sum = 0;
    for (std::size_t p = 0; p < size(); ++p) sum += at(gold, p);
    return sum;
}

std::uint64_t ConfusionMatrix::column_sum(std::size_t pred) const {
    std::uint64_t sum = 0;
    for (std::size_t g = 0; g < size(); ++g) sum += at(g, pred);
    return sum;
}

std::uint64_t ConfusionMatrix::trace() const {
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < size(); ++c) sum += at(c, c);
    return sum;
}

std::uint64_t ConfusionMatrix::true_negatives(std::size_t c) const {
    return total_ - true_positives(c) - false_positives(c) - false_negatives(c);
}

std::vector<std::vector<std::uint64_t>> ConfusionMatrix::counts() const {
    std::vector<std::vector<std::uint64_t>> out(size(), std::vector<std::uint64_t>(size()));
    for (std::size_t g = 0; g < size(); ++g)
        for (std::size_t p = 0; p < size(); ++p) out[g][p] = at(g, p);
    return out;
}

std::vector<std::vector<double>> ConfusionMatrix::row_normalized() const {
    std::vector<std::vector<double>> out(size(), std::vector<double>(size(), 0.0));
    for (std::size_t g = 0; g < size(); ++g) {
        const auto row = row_sum(g);
        if (row == 0) continue;
        for (std::size_t p = 0; p < size(); ++p) {
            out[g][p] = static_cast<double>(at(g, p)) / static_cast<double>(row);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// WeightScheme

WeightScheme::WeightScheme(std::string name, const std::map<std::string, double>& weights)
    : name_(std::move(name)) {
    if (weights.empty()) throw config_error(fmt::format("weight scheme '{}' has no weights", name_));
    double sum = 0.0;
    for (const auto& [raw, w] : weights) {
        auto cls = canonical_label(raw);
        if (cls.empty()) throw config_error(fmt::format("weight scheme '{}' has an empty class name", name_));
        if (!std::isfinite(w) || w < 0.0) {
            throw config_error(fmt::format("weight scheme '{}': weight for '{}' must be a finite value >= 0, got {}", name_, cls, w));
        }
        if (!weights_.emplace(cls, w).second) {
            throw config_error(fmt::format("weight scheme '{}' lists class '{}' twice", name_, cls));
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw config_error(fmt::format("weight scheme '{}': weights sum to {}, expected 1", name_, sum));
    }
}

WeightScheme WeightScheme::uniform(const LabelSchema& schema) {
    std::map<std::string, double> weights;
    const double w = 1.0 / static_cast<double>(schema.size());
    for (const auto& cls : schema.classes()) weights[cls] = w;
    return WeightScheme("uniform", weights);
}

std::vector<double> WeightScheme::for_schema(const LabelSchema& schema) const {
    std::vector<double> out;
    out.reserve(schema.size());
    for (const auto& cls : schema.classes()) {
        auto it = weights_.find(cls);
        if (it == weights_.end()) {
            throw config_error(fmt::format("weight scheme '{}' has no weight for class '{}'", name_, cls));
        }
        out.push_back(it->second);
    }
    if (weights_.size() != schema.size()) {
        std::vector<std::string> extra;
        for (const auto& [cls, w] : weights_) {
            if (!schema.index_of(cls)) extra.push_back(cls);
        }
        throw config_error(fmt::format("weight scheme '{}' names classes outside the schema: {}", name_, fmt::join(extra, ", ")));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

void require_nonempty(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw degenerate_error("cannot compute metrics on an empty confusion matrix");
}

void require_beta(double beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw config_error(fmt::format("beta must be a finite value > 0, got {}", beta));
    }
}

double ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double precision_of(const ConfusionMatrix& cm, std::size_t c) {
    return ratio(cm.true_positives(c), cm.column_sum(c));
}

double recall_of(const ConfusionMatrix& cm, std::size_t c, AbsentClassPolicy policy) {
    const auto gold = cm.row_sum(c);
    if (gold == 0 && policy == AbsentClassPolicy::Strict) {
        throw absent_class_error(fmt::format(
            "class '{}' has no gold instances; recall is undefined (use lenient mode to score it as 0)",
            cm.schema().name(c)));
    }
    return ratio(cm.true_positives(c), gold);
}

double fpr_of(const ConfusionMatrix& cm, std::size_t c) {
    const auto fp = cm.false_positives(c);
    return ratio(fp, cm.true_negatives(c) + fp);
}

}  // namespace

ConfusionMatrix confusion_from_pairs(std::span<const std::string> gold,
                                     std::span<const std::string> pred,
                                     const LabelSchema& schema) {
    if (gold.size() != pred.size()) {
        throw alignment_error(fmt::format("{} gold labels but {} predicted labels", gold.size(), pred.size()));
    }
    if (gold.empty()) throw degenerate_error("no label pairs to count");
    ConfusionMatrix cm(schema);
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const auto g = schema.index_of(gold[i]);
        if (!g) throw schema_error(fmt::format("gold label '{}' at position {} is not in the schema", gold[i], i));
        const auto p = schema.index_of(pred[i]);
        if (!p) throw schema_error(fmt::format("predicted label '{}' at position {} is not in the schema", pred[i], i));
        cm.add(*g, *p);
    }
    return cm;
}

double accuracy(const ConfusionMatrix& cm) {
    require_nonempty(cm);
    return ratio(cm.trace(), cm.total());
}

double fbeta_score(double precision, double recall, double beta) noexcept {
    const double b2 = beta * beta;
    const double den = b2 * precision + recall;
    if (den == 0.0) return 0.0;
    return (1.0 + b2) * precision * recall / den;
}

ClassRates class_rates(const ConfusionMatrix& cm, std::span<const double> betas, AbsentClassPolicy policy) {
    require_nonempty(cm);
    for (double beta : betas) require_beta(beta);
    ClassRates rates;
    rates.betas.assign(betas.begin(), betas.end());
    rates.classes.reserve(cm.size());
    for (std::size_t c = 0; c < cm.size(); ++c) {
        ClassRate rate;
        rate.name = cm.schema().name(c);
        rate.precision = precision_of(cm, c);
        rate.recall = recall_of(cm, c, policy);
        rate.false_positive_rate = fpr_of(cm, c);
        for (double beta : betas) rate.fbeta.push_back(fbeta_score(rate.precision, rate.recall, beta));
        rates.classes.push_back(std::move(rate));
    }
    return rates;
}

double macro_fbeta(const ConfusionMatrix& cm, double beta, AbsentClassPolicy policy) {
    require_nonempty(cm);
    require_beta(beta);
    double sum = 0.0;
    for (std::size_t c = 0; c < cm.size(); ++c) {
        sum += fbeta_score(precision_of(cm, c), recall_of(cm, c, policy), beta);
    }
    return sum / static_cast<double>(cm.size());
}

double gmr(const ConfusionMatrix& cm, AbsentClassPolicy policy) {
    require_nonempty(cm);
    double product = 1.0;
    bool zero = false;
    // Every recall is evaluated so strict mode still reports absent classes.
    for (std::size_t c = 0; c < cm.size(); ++c) {
        const double r = recall_of(cm, c, policy);
        if (r == 0.0) zero = true;
        product *= r;
    }
    if (zero) return 0.0;
    return std::pow(product, 1.0 / static_cast<double>(cm.size()));
}

double auc_class(const ConfusionMatrix& cm, std::size_t c, AbsentClassPolicy policy) {
    require_nonempty(cm);
    if (c >= cm.size()) throw config_error(fmt::format("class index {} out of range for K={}", c, cm.size()));
    return (1.0 + recall_of(cm, c, policy) - fpr_of(cm, c)) / 2.0;
}

double weighted_auc(const ConfusionMatrix& cm, const WeightScheme& weights, AbsentClassPolicy policy) {
    const auto w = weights.for_schema(cm.schema());
    require_nonempty(cm);
    double sum = 0.0;
    for (std::size_t c = 0; c < cm.size(); ++c) sum += w[c] * auc_class(cm, c, policy);
    return sum;
}

double weighted_fbeta(const ConfusionMatrix& cm, const WeightScheme& weights, double beta,
                      AbsentClassPolicy policy) {
    const auto w = weights.for_schema(cm.schema());
    require_nonempty(cm);
    require_beta(beta);
    double sum = 0.0;
    for (std::size_t c = 0; c < cm.size(); ++c) {
        sum += w[c] * fbeta_score(precision_of(cm, c), recall_of(cm, c, policy), beta);
    }
    return sum;
}

MetricReport all_metrics(const ConfusionMatrix& cm, const WeightScheme& weights,
                         std::span<const double> betas, AbsentClassPolicy policy, std::string system) {
    // Validate the scheme before anything else so a bad scheme is reported as such.
    weights.for_schema(cm.schema());
    MetricReport report{
        .system = std::move(system),
        .accuracy = accuracy(cm),
        .macro_f1 = macro_fbeta(cm, 1.0, policy),
        .gmr = gmr(cm, policy),
        .wauc = weighted_auc(cm, weights, policy),
        .wf1 = weighted_fbeta(cm, weights, 1.0, policy),
        .wf2 = weighted_fbeta(cm, weights, 2.0, policy),
        .rates = class_rates(cm, betas, policy),
        .fbeta = {},
        .scheme = weights,
        .confusion = cm,
    };
    for (double beta : betas) {
        report.fbeta.push_back({beta, macro_fbeta(cm, beta, policy), weighted_fbeta(cm, weights, beta, policy)});
    }
    return report;
}

}  // namespace stanceval
