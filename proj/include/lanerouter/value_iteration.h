// Copyright 2026 The lanerouter Authors
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

// Synchronous value iteration. Used as the reference solver in tests and as
// the fallback when the label-setting router finds the costs non-monotone.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "lanerouter/lane_graph.h"
#include "lanerouter/mdp.h"
#include "lanerouter/router.h"

namespace lanerouter {

struct VIConfig {
  double tolerance = 1e-10;             // max-norm change that stops the sweep
  std::uint64_t max_iterations = 1000000;
  double value_cap = 1e12;              // stands in for "unreachable"
  bool record_residuals = false;

  void Validate() const;
};

enum class SweepKernel {
  kSerial,  // reference loop
  kOpenMP,  // parallel over cells; bit-identical to kSerial
};

class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError(std::uint64_t iterations, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Jacobi sweeps g_{k+1}(x) = min_a q(x, a; g_k) with g(goal) pinned to 0.
/// Cells that cannot reach the goal under any action sequence are reported
/// Unreachable; the policy is the argmin under the fixed action order.
Solution ValueIterate(const LaneGraph& graph, CellIndex goal,
                      const SolveParams& params, const VIConfig& cfg = {},
                      SweepKernel kernel = SweepKernel::kOpenMP);
Solution ValueIterate(const LaneGraph& graph, std::string_view goal,
                      const SolveParams& params, const VIConfig& cfg = {},
                      SweepKernel kernel = SweepKernel::kOpenMP);

}  // namespace lanerouter
