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

#include "stanceval/baselines.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "stanceval/error.hpp"

namespace stanceval {

std::string BaselineSpec::display_name() const {
    return kind == Kind::Majority ? std::string("majority class") : fmt::format("all {}", label);
}

LabeledSet constant_predictor(const LabeledSet& gold, const std::string& label, const LabelSchema& schema) {
    const auto& cls = schema.name(schema.require_index(label));
    LabeledSet::Entries entries;
    for (const auto& [id, unused] : gold.entries()) entries.emplace_hint(entries.end(), id, cls);
    return LabeledSet(fmt::format("all {}", cls), std::move(entries));
}

Baseline majority_predictor(const LabeledSet& gold, const LabelSchema& schema) {
    const auto dist = class_distribution(gold, schema);
    std::uint64_t best = 0;
    for (const auto& c : dist.classes) best = std::max(best, c.count);

    BaselineSpec spec{.kind = BaselineSpec::Kind::Majority, .label = {}, .tied = {}};
    for (const auto& c : dist.classes) {
        if (c.count == best) spec.tied.push_back(c.name);
    }
    spec.label = spec.tied.front();

    auto predictions = constant_predictor(gold, spec.label, schema);
    return {std::move(spec), LabeledSet("majority class", predictions.entries())};
}

std::vector<Baseline> baseline_suite(const LabeledSet& gold, const LabelSchema& schema) {
    std::vector<Baseline> suite;
    suite.push_back(majority_predictor(gold, schema));
    for (const auto& cls : schema.classes()) {
        suite.push_back({BaselineSpec{.kind = BaselineSpec::Kind::Constant, .label = cls, .tied = {}},
                         constant_predictor(gold, cls, schema)});
    }
    return suite;
}

}  // namespace stanceval
