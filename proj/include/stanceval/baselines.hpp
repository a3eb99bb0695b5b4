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

#ifndef STANCEVAL_BASELINES_HPP
#define STANCEVAL_BASELINES_HPP

#include <string>
#include <vector>

#include "stanceval/labels_io.hpp"
#include "stanceval/metrics.hpp"

namespace stanceval {

struct BaselineSpec {
    enum class Kind { Majority, Constant };

    Kind kind = Kind::Majority;
    std::string label;              // predicted class; for Majority the resolved class
    std::vector<std::string> tied;  // Majority only: every class sharing the top count

    bool has_tie() const noexcept { return tied.size() > 1; }

    /// "majority class", "all deny", ...
    std::string display_name() const;
};

/// Predict `label` for every id in `gold`.
LabeledSet constant_predictor(const LabeledSet& gold, const std::string& label, const LabelSchema& schema);

struct Baseline {
    BaselineSpec spec;
    LabeledSet predictions;
};

/// Constant predictor for the most frequent gold class; ties go to the class
/// listed first in the schema and are recorded in spec.tied.
Baseline majority_predictor(const LabeledSet& gold, const LabelSchema& schema);

/// Majority predictor followed by one constant predictor per schema class.
std::vector<Baseline> baseline_suite(const LabeledSet& gold, const LabelSchema& schema);

}  // namespace stanceval

#endif  // STANCEVAL_BASELINES_HPP
