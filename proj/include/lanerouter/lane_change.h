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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lanerouter {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Expected number of successful lane changes per meter of continuous
/// attempting.
class LaneChangeRate {
 public:
  explicit LaneChangeRate(double per_meter) : alpha_(per_meter) {
    if (!(per_meter > 0.0) || !std::isfinite(per_meter)) {
      throw DomainError("lane change rate must be finite and > 0, got " +
                        std::to_string(per_meter));
    }
  }

  double per_meter() const { return alpha_; }

 private:
  double alpha_;
};

/// Probability that a lane change attempted along `length` meters succeeds:
/// 1 - exp(-alpha * length). Exponential CDF, so splitting a lane into cells
/// does not change the overall success probability.
inline double SuccessProb(LaneChangeRate alpha, double length) {
  if (!(length >= 0.0)) {
    throw DomainError("lane change length must be >= 0, got " +
                      std::to_string(length));
  }
  return -std::expm1(-alpha.per_meter() * length);
}

}  // namespace lanerouter
