// encoders/encoder.cc

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

#include "encoders/encoder.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace awe {

namespace {

using Eigen::VectorXd;

constexpr char kAudioPrefix[] = "audio";
constexpr char kTextPrefix[] = "text";
constexpr char kTextEmbedName[] = "text.embed";

RowMatrixXd NormalizedAudioInput(const ParamStore &params,
                                 const FeatureSequence &seq) {
  const auto shift = params.Get(kInputShiftName).Flat();
  const auto scale = params.Get(kInputScaleName).Flat();
  AWE_CHECK(seq.Dim() == shift.size(), "feature dimension ", seq.Dim(),
            " does not match the model (", shift.size(), ")");
  RowMatrixXd x = seq.frames.cast<double>();
  x.rowwise() -= shift.transpose();
  x.array().rowwise() *= scale.transpose().array();
  return x;
}

RowMatrixXd EmbedPhonemes(const ParamStore &params, const EncoderConfig &cfg,
                          const PhonemeSequence &seq) {
  AWE_CHECK(!seq.empty(), "empty sequence in batch");
  const auto table = params.Get(kTextEmbedName).Matrix();
  RowMatrixXd x(seq.size(), table.cols());
  for (size_t p = 0; p < seq.size(); ++p) {
    if (seq[p] < 0 || seq[p] >= cfg.text_vocab)
      AWE_ERR("out-of-vocabulary phoneme id ", seq[p], " (vocabulary size ",
              cfg.text_vocab, ")");
    x.row(p) = table.row(seq[p]);
  }
  return x;
}

// Returns the unit vector and stores the pre-normalization norm.
VectorXd Normalize(const VectorXd &z, double *norm) {
  *norm = z.norm();
  AWE_CHECK(*norm > 0.0 && std::isfinite(*norm),
            "embedding has zero or non-finite norm");
  return z / *norm;
}

// Gradient through e = z / |z|.
VectorXd NormalizeBackward(const VectorXd &e, double norm, const VectorXd &g) {
  return (g - e.dot(g) * e) / norm;
}

template <typename Item, typename InputFn>
EmbeddingBatch EncodeBatch(const ParamStore &params, const EncoderConfig &cfg,
                           const char *prefix, int input_dim,
                           std::span<const Item> batch, InputFn input_fn) {
  AWE_CHECK(!batch.empty(), "empty batch");
  SequenceEncoder body(params, cfg, prefix, input_dim);
  EmbeddingBatch out;
  out.vectors.resize(batch.size(), cfg.embed_dim);
  for (size_t i = 0; i < batch.size(); ++i) {
    SequenceEncoder::Trace trace;
    double norm;
    out.vectors.row(i) =
        Normalize(body.Forward(input_fn(batch[i]), &trace), &norm).transpose();
  }
  return out;
}

}  // namespace

ParamStore InitParams(const EncoderConfig &cfg, uint64_t seed) {
  cfg.Validate();
  ParamStore params;
  params.Add(kInputShiftName, {static_cast<uint32_t>(cfg.feat_dim)});
  params.Add(kInputScaleName, {static_cast<uint32_t>(cfg.feat_dim)});
  params.Add(kTextEmbedName, {static_cast<uint32_t>(cfg.text_vocab),
                              static_cast<uint32_t>(cfg.text_embed_dim)});
  params.Add(kLogTemperatureName, {});
  SequenceEncoder::AddParams(&params, cfg, kAudioPrefix, cfg.feat_dim);
  SequenceEncoder::AddParams(&params, cfg, kTextPrefix, cfg.text_embed_dim);

  std::mt19937_64 rng(seed);
  for (auto &[name, t] : params) {
    if (t.Rank() != 2) continue;
    double bound = std::sqrt(6.0 / (t.shape[0] + t.shape[1]));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (double &v : t.data) v = dist(rng);
  }
  params.Get(kInputScaleName).Flat().setOnes();
  params.Get(kLogTemperatureName).Scalar() = std::log(1.0 / 0.07);
  return params;
}

EncoderConfig InferEncoderConfig(const ParamStore &params) {
  auto dim = [&](const std::string &name, size_t axis) {
    const Tensor &t = params.Get(name);
    AWE_CHECK(axis < t.Rank(), "parameter ", name, " has unexpected rank");
    return static_cast<int>(t.shape[axis]);
  };
  EncoderConfig cfg;
  cfg.feat_dim = dim(kInputShiftName, 0);
  cfg.text_vocab = dim(kTextEmbedName, 0);
  cfg.text_embed_dim = dim(kTextEmbedName, 1);
  cfg.embed_dim = dim("audio.proj.b", 0);
  if (params.Has("audio.mlp0.W")) {
    cfg.kind = EncoderKind::kPooled;
    cfg.hidden = dim("audio.mlp0.W", 0);
    cfg.pool_segments = dim("audio.mlp0.W", 1) / cfg.feat_dim;
  } else {
    cfg.kind = EncoderKind::kRecurrent;
    cfg.hidden = dim("audio.gru0.fwd.Wh", 1);
    cfg.bidirectional = params.Has("audio.gru0.bwd.Wh");
    cfg.layers = 0;
    while (params.Has(internal::StrCat("audio.gru", cfg.layers, ".fwd.Wh")))
      ++cfg.layers;
  }
  cfg.Validate();
  AWE_CHECK(params.SameLayout(InitParams(cfg, 0)),
            "checkpoint does not describe a known encoder layout");
  return cfg;
}

void SetInputNormalization(ParamStore *params, const VectorXd &mean,
                           const VectorXd &stddev) {
  auto shift = params->Get(kInputShiftName).Flat();
  auto scale = params->Get(kInputScaleName).Flat();
  AWE_CHECK(mean.size() == shift.size() && stddev.size() == shift.size(),
            "normalization statistics have the wrong dimension");
  shift = mean;
  scale = stddev.unaryExpr([](double s) { return 1.0 / std::max(s, 1e-8); });
}

void FrameStatistics(std::span<const FeatureSequence> seqs, VectorXd *mean,
                     VectorXd *stddev) {
  AWE_CHECK(!seqs.empty(), "no sequences for frame statistics");
  const int F = seqs[0].Dim();
  VectorXd sum = VectorXd::Zero(F), sum_sq = VectorXd::Zero(F);
  double count = 0;
  for (const auto &s : seqs) {
    AWE_CHECK(s.Dim() == F, "inconsistent feature dimensions");
    RowMatrixXd x = s.frames.cast<double>();
    sum += x.colwise().sum().transpose();
    sum_sq += x.array().square().matrix().colwise().sum().transpose();
    count += x.rows();
  }
  *mean = sum / count;
  VectorXd var = sum_sq / count - mean->cwiseProduct(*mean);
  *stddev = var.cwiseMax(0.0).cwiseSqrt();
}

double LogitScale(const ParamStore &params) {
  return std::min(std::exp(params.Get(kLogTemperatureName).Scalar()),
                  kMaxLogitScale);
}

EmbeddingBatch EncodeAudio(const ParamStore &params, const EncoderConfig &cfg,
                           std::span<const FeatureSequence> batch) {
  return EncodeBatch(params, cfg, kAudioPrefix, cfg.feat_dim, batch,
                     [&](const FeatureSequence &s) {
                       return NormalizedAudioInput(params, s);
                     });
}

EmbeddingBatch EncodeText(const ParamStore &params, const EncoderConfig &cfg,
                          std::span<const PhonemeSequence> batch) {
  return EncodeBatch(params, cfg, kTextPrefix, cfg.text_embed_dim, batch,
                     [&](const PhonemeSequence &s) {
                       return EmbedPhonemes(params, cfg, s);
                     });
}

void BackwardAudio(const ParamStore &params, const EncoderConfig &cfg,
                   std::span<const FeatureSequence> batch,
                   const Eigen::MatrixXd &upstream, ParamStore *grads) {
  AWE_CHECK(upstream.rows() == static_cast<Eigen::Index>(batch.size()) &&
                upstream.cols() == cfg.embed_dim,
            "upstream gradient shape ", upstream.rows(), "x", upstream.cols(),
            " does not match the batch (", batch.size(), "x", cfg.embed_dim,
            ")");
  SequenceEncoder body(params, cfg, kAudioPrefix, cfg.feat_dim);
  const auto shift = params.Get(kInputShiftName).Flat();
  const auto scale = params.Get(kInputScaleName).Flat();
  auto g_shift = grads->Get(kInputShiftName).Flat();
  auto g_scale = grads->Get(kInputScaleName).Flat();
  for (size_t i = 0; i < batch.size(); ++i) {
    SequenceEncoder::Trace trace;
    double norm;
    VectorXd e = Normalize(
        body.Forward(NormalizedAudioInput(params, batch[i]), &trace), &norm);
    VectorXd dz = NormalizeBackward(e, norm, upstream.row(i).transpose());
    RowMatrixXd dx = body.Backward(trace, dz, grads);
    RowMatrixXd centered = batch[i].frames.cast<double>();
    centered.rowwise() -= shift.transpose();
    g_scale += (dx.array() * centered.array()).colwise().sum().transpose().matrix();
    g_shift -= (dx.colwise().sum().transpose().array() * scale.array()).matrix();
  }
}

void BackwardText(const ParamStore &params, const EncoderConfig &cfg,
                  std::span<const PhonemeSequence> batch,
                  const Eigen::MatrixXd &upstream, ParamStore *grads) {
  AWE_CHECK(upstream.rows() == static_cast<Eigen::Index>(batch.size()) &&
                upstream.cols() == cfg.embed_dim,
            "upstream gradient shape ", upstream.rows(), "x", upstream.cols(),
            " does not match the batch (", batch.size(), "x", cfg.embed_dim,
            ")");
  SequenceEncoder body(params, cfg, kTextPrefix, cfg.text_embed_dim);
  auto g_table = grads->Get(kTextEmbedName).Matrix();
  for (size_t i = 0; i < batch.size(); ++i) {
    SequenceEncoder::Trace trace;
    double norm;
    VectorXd e = Normalize(
        body.Forward(EmbedPhonemes(params, cfg, batch[i]), &trace), &norm);
    VectorXd dz = NormalizeBackward(e, norm, upstream.row(i).transpose());
    RowMatrixXd dx = body.Backward(trace, dz, grads);
    for (size_t p = 0; p < batch[i].size(); ++p)
      g_table.row(batch[i][p]) += dx.row(p);
  }
}

}  // namespace awe
