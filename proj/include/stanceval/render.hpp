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

#ifndef STANCEVAL_RENDER_HPP
#define STANCEVAL_RENDER_HPP

#include <string>
#include <string_view>

#include "stanceval/evalsuite.hpp"
#include "stanceval/labels_io.hpp"

namespace stanceval {

enum class OutputFormat { Markdown, Csv, Latex, Json, Svg };

OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format) noexcept;

// Tabular formats print scores with 3 decimals and the rank in parentheses,
// e.g. "0.784 (1)"; json keeps full precision. Output depends only on the
// input value.

std::string render(const RankedTable& table, OutputFormat format);
std::string render(const ConfusionReport& report, OutputFormat format);

/// Class distributions have no svg rendering (configuration error).
std::string render(const ClassDistribution& dist, OutputFormat format);

}  // namespace stanceval

#endif  // STANCEVAL_RENDER_HPP
