// training/schedule.cc

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

#include "training/schedule.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "base/awe-common.h"

namespace awe {

namespace {

double CosineAnneal(double start, double end, double pct) {
  return end + (start - end) / 2.0 * (1.0 + std::cos(std::numbers::pi * pct));
}

}  // namespace

double OneCycleLr(int64_t step, int64_t total_steps, const OneCycleConfig &cfg) {
  if (total_steps < 1 || step < 0 || step >= total_steps)
    AWE_ERR("learning-rate step ", step, " out of range [0, ", total_steps, ")");
  const double initial = cfg.lr_max / cfg.div_factor;
  const double final_lr = cfg.lr_max / cfg.final_div_factor;
  const double warm_end =
      std::max(cfg.warmup_frac * static_cast<double>(total_steps) - 1.0, 0.0);
  const double last = static_cast<double>(total_steps - 1);
  const double s = static_cast<double>(step);
  if (s <= warm_end) {
    double pct = warm_end > 0.0 ? s / warm_end : 1.0;
    return CosineAnneal(initial, cfg.lr_max, pct);
  }
  double span = last - warm_end;
  double pct = span > 0.0 ? (s - warm_end) / span : 1.0;
  return CosineAnneal(cfg.lr_max, final_lr, pct);
}

}  // namespace awe
