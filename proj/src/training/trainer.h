// training/trainer.h

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

#ifndef AWE_TRAINING_TRAINER_H_
#define AWE_TRAINING_TRAINER_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "encoders/encoder.h"
#include "losses/contrastive-loss.h"
#include "training/batch-sampler.h"
#include "training/optimizer.h"
#include "training/schedule.h"

namespace awe {

struct TrainConfig {
  int batch_classes = 8;   // N
  int positives = 4;       // M
  double lr_max = 1e-3;
  double weight_decay = 1e-4;
  double clip_norm = 1.0;
  int epochs = 30;
  double warmup_frac = 0.2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  uint64_t seed = 1;
  LossWeights weights;
  DwdOptions dwd;
  // Initialize the audio input normalization from training-set frame
  // statistics.
  bool normalize_inputs = true;

  void Validate() const;
  OneCycleConfig Schedule() const;
  AdamWConfig Optimizer() const;
};

/// Loss of one N x M batch through both encoders, with parameter gradients
/// accumulated into `grads` when non-null. `audio` holds instance i of class
/// j at position j * M + i.
TotalLossValue PipelineLoss(const ParamStore &params, const EncoderConfig &enc,
                            std::span<const FeatureSequence> audio,
                            std::span<const PhonemeSequence> texts, int m,
                            const LossWeights &weights, const DwdOptions &dwd,
                            ParamStore *grads);

struct StepMetrics {
  int64_t step = 0;
  int epoch = 0;
  double lr = 0.0;
  double loss = 0.0;
  double clap = 0.0;
  double dwd = 0.0;
  double exp_tau = 0.0;
  double grad_norm = 0.0;  // before clipping
  bool with_replacement = false;
};

inline constexpr char kMetricsHeader[] = "step,epoch,lr,loss,clap,dwd,exp_tau";
std::string FormatMetricsRow(const StepMetrics &m);

struct TrainData {
  std::vector<ManifestRecord> records;
  std::vector<FeatureSequence> features;  // parallel to records
  Lexicon lexicon;
};

struct TrainOutput {
  // Directory for checkpoints and metrics.csv; nothing is written if empty.
  std::filesystem::path out_dir;
  // Per-epoch checkpoint (epoch_NNN.awep) to continue from; its optimizer
  // state must sit next to it.
  std::filesystem::path resume_from;
  std::function<void(const StepMetrics &)> on_step;
};

struct TrainResult {
  ParamStore params;
  std::vector<StepMetrics> metrics;  // steps run in this call
  int64_t total_steps = 0;
};

int64_t StepsPerEpoch(const TrainingPool &pool, const TrainConfig &cfg);

/// Runs cfg.epochs epochs of StepsPerEpoch steps. Step s samples its batch
/// from an RNG seeded with (cfg.seed, s), so a resumed run replays the
/// uninterrupted one exactly.
TrainResult Train(const TrainData &data, const TrainConfig &cfg,
                  const EncoderConfig &enc, const TrainOutput &out = {});

std::filesystem::path EpochCheckpointPath(const std::filesystem::path &dir,
                                          int epoch);
std::filesystem::path OptStatePath(const std::filesystem::path &checkpoint);

}  // namespace awe

#endif  // AWE_TRAINING_TRAINER_H_
