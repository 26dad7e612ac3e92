// cli/grad-check.h

// Copyright 2026  AWE Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.


#ifndef AWE_CLI_GRAD_CHECK_H_
#define AWE_CLI_GRAD_CHECK_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace awe {

struct GradCheckResult {
  std::string name;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  int64_t num_checked = 0;
  bool passed = false;
};

inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kLossTolerance = 1e-6;
inline constexpr double kPipelineTolerance = 1e-4;

/// |a - n| / max(|a|, |n|, 1e-3).
double RelativeError(double analytic, double numeric);

/// Largest RelativeError between `analytic` and central differences of `f`
/// around `x`, one coordinate at a time.
double MaxFiniteDifferenceError(
    const std::function<double(const Eigen::VectorXd &)> &f,
    const Eigen::VectorXd &x, const Eigen::VectorXd &analytic,
    double h = kFiniteDifferenceStep);

/// Every loss with respect to its embedding inputs, and the full pipeline of
/// each encoder kind with respect to every parameter, on small random
/// fixtures drawn from `seed`.
std::vector<GradCheckResult> RunGradientChecks(uint64_t seed);

}  // namespace awe

#endif  // AWE_CLI_GRAD_CHECK_H_
