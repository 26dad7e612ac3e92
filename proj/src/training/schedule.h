// training/schedule.h

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

#ifndef AWE_TRAINING_SCHEDULE_H_
#define AWE_TRAINING_SCHEDULE_H_

#include <cstdint>

namespace awe {

struct OneCycleConfig {
  double lr_max = 1e-3;
  double warmup_frac = 0.2;
  double div_factor = 25.0;         // first lr = lr_max / div_factor
  double final_div_factor = 1e4;    // last lr = lr_max / final_div_factor
};

/// One-cycle learning rate. The warmup phase ends at step
/// warmup_frac * total - 1 and rises from lr_max / div_factor to lr_max along
/// a half cosine; the rest anneals along a half cosine to
/// lr_max / final_div_factor, reached at the last step.
double OneCycleLr(int64_t step, int64_t total_steps, const OneCycleConfig &cfg);

}  // namespace awe

#endif  // AWE_TRAINING_SCHEDULE_H_
