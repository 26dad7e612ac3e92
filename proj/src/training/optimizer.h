// training/optimizer.h

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

#ifndef AWE_TRAINING_OPTIMIZER_H_
#define AWE_TRAINING_OPTIMIZER_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "encoders/param-store.h"

namespace awe {

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 1e-4;
};

/// Adam moments mirroring a ParamStore, plus the number of steps taken.
struct OptState {
  ParamStore m;
  ParamStore v;
  int64_t step = 0;

  static OptState ZerosFor(const ParamStore &params);
  bool operator==(const OptState &) const = default;
};

double GlobalNorm(const ParamStore &grads);

/// Rescales every gradient by clip_norm / g when the global L2 norm g exceeds
/// clip_norm. Returns g. Throws "non-finite gradient" on NaN or Inf.
double ClipGlobalNorm(ParamStore *grads, double clip_norm);

/// Decoupled weight decay applies to weight matrices and tables only; scalars
/// (log_temperature) and vectors (biases, input normalization) are exempt.
bool IsDecayed(const Tensor &t);

/// One AdamW update: p *= 1 - lr * wd (decayed entries only), then
/// p -= lr * m_hat / (sqrt(v_hat) + eps) with bias-corrected moments.
void AdamWStep(ParamStore *params, const ParamStore &grads, OptState *state,
               double lr, const AdamWConfig &cfg);

// Stored in the checkpoint format with entries "m/<name>", "v/<name>" and a
// scalar "step".
void SaveOptState(const OptState &state, const std::filesystem::path &path);
OptState LoadOptState(const std::filesystem::path &path);

}  // namespace awe

#endif  // AWE_TRAINING_OPTIMIZER_H_
