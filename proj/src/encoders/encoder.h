// encoders/encoder.h

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

#ifndef AWE_ENCODERS_ENCODER_H_
#define AWE_ENCODERS_ENCODER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "encoders/param-store.h"
#include "encoders/sequence-encoder.h"
#include "frontend/feature-io.h"
#include "frontend/manifest.h"

namespace awe {

/// B x D matrix of unit-norm rows; row i belongs to row_ids[i] when ids are
/// known.
struct EmbeddingBatch {
  Eigen::MatrixXd vectors;
  std::vector<std::string> row_ids;

  int Size() const { return static_cast<int>(vectors.rows()); }
  int Dim() const { return static_cast<int>(vectors.cols()); }
};

inline constexpr char kInputShiftName[] = "audio.in_shift";
inline constexpr char kInputScaleName[] = "audio.in_scale";

/// Parameters of both towers plus log_temperature. Matrices are
/// Xavier-uniform and biases start at zero. The input normalization starts
/// as the identity and log_temperature at ln(1/0.07). Deterministic in `seed`.
ParamStore InitParams(const EncoderConfig &cfg, uint64_t seed);

/// Recovers the architecture from parameter names and shapes, so a
/// checkpoint is self-describing.
EncoderConfig InferEncoderConfig(const ParamStore &params);

/// Sets the audio input normalization to (x - mean) / stddev per dimension.
/// Entries of `stddev` below 1e-8 are treated as 1e-8.
void SetInputNormalization(ParamStore *params, const Eigen::VectorXd &mean,
                           const Eigen::VectorXd &stddev);

/// Per-dimension mean and standard deviation over every frame of `seqs`.
void FrameStatistics(std::span<const FeatureSequence> seqs,
                     Eigen::VectorXd *mean, Eigen::VectorXd *stddev);

/// exp(log_temperature) clamped to at most kMaxLogitScale.
double LogitScale(const ParamStore &params);

EmbeddingBatch EncodeAudio(const ParamStore &params, const EncoderConfig &cfg,
                           std::span<const FeatureSequence> batch);
EmbeddingBatch EncodeText(const ParamStore &params, const EncoderConfig &cfg,
                          std::span<const PhonemeSequence> batch);

/// Gradients of sum_ij upstream(i, j) * E(i, j) with respect to every
/// parameter, accumulated into `grads` (which must have the layout of
/// `params`). The forward pass is recomputed internally.
void BackwardAudio(const ParamStore &params, const EncoderConfig &cfg,
                   std::span<const FeatureSequence> batch,
                   const Eigen::MatrixXd &upstream, ParamStore *grads);
void BackwardText(const ParamStore &params, const EncoderConfig &cfg,
                  std::span<const PhonemeSequence> batch,
                  const Eigen::MatrixXd &upstream, ParamStore *grads);

}  // namespace awe

#endif  // AWE_ENCODERS_ENCODER_H_
