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

#ifndef STANCEVAL_ERROR_HPP
#define STANCEVAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stanceval {

enum class ErrorKind {
    Parse,           // malformed file contents
    Duplicate,       // an instance id occurs twice in one file
    Schema,          // a label that is not part of the schema
    Alignment,       // gold and prediction ids do not match
    Degenerate,      // empty input where at least one item is required
    AbsentClass,     // a schema class has no gold instances (strict mode)
    Configuration,   // bad weights, unknown scheme/format, invalid flags
    EmptyEvaluation, // every system was dropped
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so the CLI can map it
/// to an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return {ErrorKind::Parse, msg}; }
inline Error duplicate_error(const std::string& msg) { return {ErrorKind::Duplicate, msg}; }
inline Error schema_error(const std::string& msg) { return {ErrorKind::Schema, msg}; }
inline Error alignment_error(const std::string& msg) { return {ErrorKind::Alignment, msg}; }
inline Error degenerate_error(const std::string& msg) { return {ErrorKind::Degenerate, msg}; }
inline Error absent_class_error(const std::string& msg) { return {ErrorKind::AbsentClass, msg}; }
inline Error config_error(const std::string& msg) { return {ErrorKind::Configuration, msg}; }
inline Error empty_evaluation_error(const std::string& msg) { return {ErrorKind::EmptyEvaluation, msg}; }

}  // namespace stanceval

#endif  // STANCEVAL_ERROR_HPP
