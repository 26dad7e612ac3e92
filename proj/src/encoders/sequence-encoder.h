// encoders/sequence-encoder.h

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

#ifndef AWE_ENCODERS_SEQUENCE_ENCODER_H_
#define AWE_ENCODERS_SEQUENCE_ENCODER_H_

#include <string>
#include <vector>

#include "base/awe-common.h"
#include "encoders/param-store.h"

namespace awe {

enum class EncoderKind { kPooled, kRecurrent };

const char *EncoderKindName(EncoderKind kind);
EncoderKind ParseEncoderKind(const std::string &s);

struct EncoderConfig {
  EncoderKind kind = EncoderKind::kPooled;
  int hidden = 256;
  int layers = 3;            // recurrent kind only
  bool bidirectional = true;  // recurrent kind only
  int embed_dim = 512;       // D, the shared space
  int feat_dim = 128;        // F, audio input width
  int text_vocab = 8;        // K phoneme symbols
  int text_embed_dim = 64;   // V, phoneme embedding width
  // Pooled kind: the sequence is cut into this many equal-duration segments
  // and each is mean-pooled; 1 gives a plain length-masked mean.
  int pool_segments = 3;

  void Validate() const;
};

/// S x T matrix of pooling weights: row s averages the frames that fall in
/// [s T / S, (s+1) T / S), fractional frames weighted by overlap. Each row
/// sums to 1.
Eigen::MatrixXd SegmentPoolingWeights(int num_frames, int num_segments);

/// Modality-independent body shared by the audio and text towers: maps a
/// T x in sequence to an unnormalized D-vector. Pooled kind: segment means ->
/// two tanh layers -> linear projection. Recurrent kind: stacked GRU layers
/// (optionally bidirectional) -> final states -> linear projection.
class SequenceEncoder {
 public:
  struct Trace;

  SequenceEncoder(const ParamStore &params, const EncoderConfig &cfg,
                  std::string prefix, int input_dim);

  /// Registers this body's parameters (zero-filled) under `prefix`.
  static void AddParams(ParamStore *params, const EncoderConfig &cfg,
                        const std::string &prefix, int input_dim);

  Eigen::VectorXd Forward(const RowMatrixXd &x, Trace *trace) const;

  /// Accumulates dLoss/dparams into `grads` and returns dLoss/dx.
  RowMatrixXd Backward(const Trace &trace, const Eigen::VectorXd &dz,
                       ParamStore *grads) const;

 private:
  const ParamStore &params_;
  const EncoderConfig &cfg_;
  std::string prefix_;
  int input_dim_;
};

struct SequenceEncoder::Trace {
  RowMatrixXd input;
  // Pooled kind.
  Eigen::MatrixXd pool_weights;
  Eigen::VectorXd pooled, hidden1, hidden2;
  // Recurrent kind, per layer and direction, indexed by processing step.
  struct Direction {
    std::vector<int> order;  // time index processed at each step
    RowMatrixXd h_prev, r, z, n, hn;
  };
  std::vector<RowMatrixXd> layer_inputs;
  std::vector<std::vector<Direction>> directions;
  Eigen::VectorXd final_state;
};

}  // namespace awe

#endif  // AWE_ENCODERS_SEQUENCE_ENCODER_H_
