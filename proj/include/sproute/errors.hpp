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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sproute {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear program whose shape is inconsistent (dimension mismatch, non-finite
// data). Never used to signal infeasibility.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Raised when an outcome handed to an evaluator is not feasible for the profile.
class InfeasibleOutcome : public Error {
 public:
  using Error::Error;
};

// A black-box algorithm or utility reducer broke its stated postcondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The requested optimization problem has no feasible point.
class InfeasibilityError : public Error {
 public:
  using Error::Error;
};

// A mechanism's own intermediate step failed in a way that only numerical
// trouble can explain (e.g. a pinned re-solve turned infeasible).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Input data rejected during validation. Carries every problem found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

}  // namespace sproute
