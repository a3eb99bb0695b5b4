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

#ifndef STANCEVAL_CLI_HPP
#define STANCEVAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "stanceval/error.hpp"

namespace stanceval::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitParse = 2,      // malformed/duplicate/unknown-label/empty input files
    kExitAlignment = 3,  // id mismatch in strict mode, or nothing left to evaluate
    kExitConfig = 4,     // flags, weights, formats, absent gold classes
    kExitPartial = 5,    // rank: some systems were dropped, table still written
};

int exit_code_for(ErrorKind kind) noexcept;

struct Streams {
    std::ostream& out;
    std::ostream& err;
    bool color = false;  // colour the "error:" prefix on err
};

/// Runs one invocation. args[0] is the program name. Never throws.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace stanceval::cli

#endif  // STANCEVAL_CLI_HPP
