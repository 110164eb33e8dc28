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

#include "sproute/lp/linear_program.hpp"

namespace sproute::lp {

// Two-phase bounded primal simplex on a dense tableau.
//
// Singleton rows are folded into variable bounds before the tableau is built,
// so pins like `x_i = c` and floors like `x_i >= b` cost no pivots. Pricing is
// Dantzig's rule, switching to Bland's lowest-index rule after a run of
// degenerate pivots; ratio-test ties go to the lowest variable index. The
// solver holds no state between calls and is deterministic.
//
// Throws StructuralError on a malformed program.
LpSolution solve_lp(const LinearProgram& lp);

// True iff phase one finds a point satisfying every row and bound. The
// objective is ignored.
bool check_feasible(const LinearProgram& lp);

}  // namespace sproute::lp
