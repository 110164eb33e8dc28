// Copyright 2026 The sproute Authors
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

#pragma once

#include <ostream>

namespace sproute::cli {

// Exit codes of the sproute command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;    // bad input or usage
inline constexpr int kExitViolation = 2;  // an audit found a violation
inline constexpr int kExitInternal = 3;

// Results go to `out` as JSON (or a table with --pretty); diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sproute::cli
