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

/** @file metrics.hpp Confusion matrix and class-weighted evaluation metrics.
 *
 * Every metric is a pure function of a ConfusionMatrix. Rows of the matrix
 * are gold classes, columns are predicted classes, both in schema order.
 *
 * Conventions for empty denominators:
 *
 * - precision is 0 for a class that is never predicted;
 * - F-beta is 0 when beta^2 * P + R is 0;
 * - the false positive rate is 0 when a class has no negatives;
 * - recall of a class with no gold instances is an error under
 *   AbsentClassPolicy::Strict and 0 under AbsentClassPolicy::Lenient.
 *
 * Values are never rounded here; rounding belongs to the renderers.
 **/

#ifndef STANCEVAL_METRICS_HPP
#define STANCEVAL_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stanceval {

/// Trim surrounding ASCII whitespace and lowercase ASCII letters.
std::string canonical_label(std::string_view label);

/// Ordered, duplicate-free list of canonical class names (at least two).
class LabelSchema {
public:
    explicit LabelSchema(std::vector<std::string> classes);

    /// support, deny, query, comment
    static LabelSchema rumoureval();

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<std::string>& classes() const noexcept { return classes_; }
    const std::string& name(std::size_t index) const { return classes_.at(index); }

    /// Position of a label after canonicalization, if it belongs to the schema.
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Like index_of but throws a schema error for unknown labels.
    std::size_t require_index(std::string_view label) const;

    bool operator==(const LabelSchema&) const = default;

private:
    std::vector<std::string> classes_;
};

enum class AbsentClassPolicy { Strict, Lenient };

class ConfusionMatrix {
public:
    explicit ConfusionMatrix(LabelSchema schema);

    /// counts[g][p]; must be K x K for the schema's K.
    ConfusionMatrix(LabelSchema schema, const std::vector<std::vector<std::uint64_t>>& counts);

    void add(std::size_t gold, std::size_t pred, std::uint64_t count = 1);

    const LabelSchema& schema() const noexcept { return schema_; }
    std::size_t size() const noexcept { return schema_.size(); }
    std::uint64_t at(std::size_t gold, std::size_t pred) const;
    std::uint64_t total() const noexcept { return total_; }

    std::uint64_t row_sum(std::size_t gold) const;
    std::uint64_t column_sum(std::size_t pred) const;
    std::uint64_t trace() const;

    std::uint64_t true_positives(std::size_t c) const { return at(c, c); }
    std::uint64_t false_positives(std::size_t c) const { return column_sum(c) - at(c, c); }
    std::uint64_t false_negatives(std::size_t c) const { return row_sum(c) - at(c, c); }
    std::uint64_t true_negatives(std::size_t c) const;

    std::vector<std::vector<std::uint64_t>> counts() const;

    /// Each row divided by its gold count; rows with no gold instances stay 0.
    std::vector<std::vector<double>> row_normalized() const;

    bool operator==(const ConfusionMatrix&) const = default;

private:
    LabelSchema schema_;
    std::vector<std::uint64_t> cells_;
    std::uint64_t total_ = 0;
};

struct ClassRate {
    std::string name;
    double precision = 0.0;
    double recall = 0.0;
    double false_positive_rate = 0.0;
    std::vector<double> fbeta;  // one entry per ClassRates::betas
};

struct ClassRates {
    std::vector<double> betas;
    std::vector<ClassRate> classes;  // schema order
};

/// Per-class importance weights. Names are canonicalized; the weights must be
/// non-negative and sum to one within kWeightSumTolerance.
class WeightScheme {
public:
    static constexpr double kWeightSumTolerance = 1e-9;

    WeightScheme(std::string name, const std::map<std::string, double>& weights);

    /// 1/K for every class of the schema.
    static WeightScheme uniform(const LabelSchema& schema);

    const std::string& name() const noexcept { return name_; }
    const std::map<std::string, double>& weights() const noexcept { return weights_; }

    /// Weights in schema order; throws a configuration error unless the
    /// scheme covers exactly the schema's classes.
    std::vector<double> for_schema(const LabelSchema& schema) const;

    bool operator==(const WeightScheme&) const = default;

private:
    std::string name_;
    std::map<std::string, double> weights_;
};

struct FbetaScores {
    double beta = 0.0;
    double macro = 0.0;
    double weighted = 0.0;
};

/// The six table columns for one system, plus everything they were derived from.
struct MetricReport {
    std::string system;
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    double gmr = 0.0;
    double wauc = 0.0;
    double wf1 = 0.0;
    double wf2 = 0.0;
    ClassRates rates;
    std::vector<FbetaScores> fbeta;  // one entry per requested beta
    WeightScheme scheme;
    ConfusionMatrix confusion;
};

inline const std::vector<double> kDefaultBetas{1.0, 2.0};

/// Count (gold[i], pred[i]) pairs. Throws an alignment error on a length
/// mismatch and a schema error naming the label and position on unknown labels.
ConfusionMatrix confusion_from_pairs(std::span<const std::string> gold,
                                     std::span<const std::string> pred,
                                     const LabelSchema& schema);

double accuracy(const ConfusionMatrix& cm);

ClassRates class_rates(const ConfusionMatrix& cm, std::span<const double> betas,
                       AbsentClassPolicy policy = AbsentClassPolicy::Strict);

double macro_fbeta(const ConfusionMatrix& cm, double beta,
                   AbsentClassPolicy policy = AbsentClassPolicy::Strict);

/// Geometric mean of per-class recall; exactly 0 if any recall is 0.
double gmr(const ConfusionMatrix& cm, AbsentClassPolicy policy = AbsentClassPolicy::Strict);

/// Area under the ROC path (0,0) -> (FPR_c, R_c) -> (1,1), i.e. (1 + R_c - FPR_c) / 2.
double auc_class(const ConfusionMatrix& cm, std::size_t c,
                 AbsentClassPolicy policy = AbsentClassPolicy::Strict);

double weighted_auc(const ConfusionMatrix& cm, const WeightScheme& weights,
                    AbsentClassPolicy policy = AbsentClassPolicy::Strict);

double weighted_fbeta(const ConfusionMatrix& cm, const WeightScheme& weights, double beta,
                      AbsentClassPolicy policy = AbsentClassPolicy::Strict);

/// F-beta of a single precision/recall pair, 0 when the denominator vanishes.
double fbeta_score(double precision, double recall, double beta) noexcept;

MetricReport all_metrics(const ConfusionMatrix& cm, const WeightScheme& weights,
                         std::span<const double> betas = kDefaultBetas,
                         AbsentClassPolicy policy = AbsentClassPolicy::Strict,
                         std::string system = {});

}  // namespace stanceval

#endif  // STANCEVAL_METRICS_HPP
