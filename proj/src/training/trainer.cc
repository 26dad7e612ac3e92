// training/trainer.cc

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

#include "training/trainer.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "base/binary-io.h"

namespace awe {

namespace {

constexpr char kMetricsFile[] = "metrics.csv";
constexpr char kFinalModel[] = "model.awep";

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Rows of an existing metrics file whose step is below `first_step`.
std::vector<std::string> KeptMetricsRows(const std::filesystem::path &path,
                                         int64_t first_step) {
  std::vector<std::string> rows;
  if (!std::filesystem::exists(path)) return rows;
  std::istringstream is(ReadFileBytes(path));
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int64_t step = std::stoll(line.substr(0, line.find(',')));
    if (step < first_step) rows.push_back(line);
  }
  return rows;
}

void WriteMetrics(const std::filesystem::path &path,
                  const std::vector<std::string> &rows) {
  std::string text = std::string(kMetricsHeader) + "\n";
  for (const auto &r : rows) text += r + "\n";
  WriteFileBytes(path, text);
}

}  // namespace

void TrainConfig::Validate() const {
  if (batch_classes < 2) throw ConfigError("train.batch_classes must be >= 2");
  if (positives < 2) throw ConfigError("train.positives must be >= 2");
  if (!(lr_max > 0.0)) throw ConfigError("train.lr_max must be > 0");
  if (!(weight_decay >= 0.0)) throw ConfigError("train.weight_decay must be >= 0");
  if (!(clip_norm > 0.0)) throw ConfigError("train.clip_norm must be > 0");
  if (epochs < 1) throw ConfigError("train.epochs must be >= 1");
  if (!(warmup_frac > 0.0 && warmup_frac < 1.0))
    throw ConfigError("train.warmup_frac must lie in (0, 1)");
  if (!(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0))
    throw ConfigError("train.beta1 and train.beta2 must lie in [0, 1)");
  if (!(eps > 0.0)) throw ConfigError("train.eps must be > 0");
  weights.Validate();
}

OneCycleConfig TrainConfig::Schedule() const {
  OneCycleConfig s;
  s.lr_max = lr_max;
  s.warmup_frac = warmup_frac;
  return s;
}

AdamWConfig TrainConfig::Optimizer() const {
  AdamWConfig a;
  a.beta1 = beta1;
  a.beta2 = beta2;
  a.eps = eps;
  a.weight_decay = weight_decay;
  return a;
}

TotalLossValue PipelineLoss(const ParamStore &params, const EncoderConfig &enc,
                            std::span<const FeatureSequence> audio,
                            std::span<const PhonemeSequence> texts, int m,
                            const LossWeights &weights, const DwdOptions &dwd,
                            ParamStore *grads) {
  const int n = static_cast<int>(texts.size());
  AWE_CHECK(static_cast<int>(audio.size()) == n * m, "audio batch has ",
            audio.size(), " items, expected ", n, " x ", m);
  EmbeddingBatch e_a = EncodeAudio(params, enc, audio);
  EmbeddingBatch e_t = EncodeText(params, enc, texts);
  DwdBatch batch(n, m, e_a.vectors);
  const double tau = params.Get(kLogTemperatureName).Scalar();
  if (!grads) return TotalLoss(e_t.vectors, batch, tau, weights, dwd);
  LossGradients g = LossGradients::Zeros(n, n * m, enc.embed_dim);
  TotalLossValue v = TotalLoss(e_t.vectors, batch, tau, weights, dwd, &g);
  BackwardAudio(params, enc, audio, g.audio, grads);
  BackwardText(params, enc, texts, g.text, grads);
  grads->Get(kLogTemperatureName).Scalar() += g.tau;
  return v;
}

std::string FormatMetricsRow(const StepMetrics &m) {
  return internal::StrCat(m.step, ",", m.epoch, ",", Fmt(m.lr), ",",
                          Fmt(m.loss), ",", Fmt(m.clap), ",", Fmt(m.dwd), ",",
                          Fmt(m.exp_tau));
}

int64_t StepsPerEpoch(const TrainingPool &pool, const TrainConfig &cfg) {
  int64_t spe = static_cast<int64_t>(pool.words.size()) / cfg.batch_classes;
  if (spe < 1)
    AWE_ERR("batch needs ", cfg.batch_classes, " distinct training words, "
            "corpus has ", pool.words.size());
  return spe;
}

std::filesystem::path EpochCheckpointPath(const std::filesystem::path &dir,
                                          int epoch) {
  char name[32];
  std::snprintf(name, sizeof(name), "epoch_%03d.awep", epoch);
  return dir / name;
}

std::filesystem::path OptStatePath(const std::filesystem::path &checkpoint) {
  std::filesystem::path p = checkpoint;
  return p.replace_extension(".opt.awep");
}

TrainResult Train(const TrainData &data, const TrainConfig &cfg,
                  const EncoderConfig &enc, const TrainOutput &out) {
  cfg.Validate();
  enc.Validate();
  AWE_CHECK(data.records.size() == data.features.size(),
            "records and features differ in length");
  TrainingPool pool = BuildTrainingPool(data.records, data.lexicon);
  const int64_t spe = StepsPerEpoch(pool, cfg);
  const int64_t total = spe * cfg.epochs;

  TrainResult result;
  result.total_steps = total;
  OptState opt;
  if (!out.resume_from.empty()) {
    result.params = LoadParamStore(out.resume_from);
    opt = LoadOptState(OptStatePath(out.resume_from));
    AWE_CHECK(result.params.SameLayout(InitParams(enc, cfg.seed)),
              out.resume_from.string(),
              ": checkpoint does not match the encoder configuration");
    AWE_CHECK(opt.step % spe == 0 && opt.step <= total,
              out.resume_from.string(), ": optimizer step ", opt.step,
              " is not an epoch boundary of this run");
  } else {
    result.params = InitParams(enc, cfg.seed);
    if (cfg.normalize_inputs) {
      std::vector<FeatureSequence> train_feats;
      for (size_t r = 0; r < data.records.size(); ++r)
        if (data.records[r].split == Split::kTrain)
          train_feats.push_back(data.features[r]);
      Eigen::VectorXd mean, stddev;
      FrameStatistics(train_feats, &mean, &stddev);
      SetInputNormalization(&result.params, mean, stddev);
    }
    opt = OptState::ZerosFor(result.params);
  }
  ParamStore &params = result.params;

  const bool write = !out.out_dir.empty();
  std::vector<std::string> rows;
  if (write) {
    std::filesystem::create_directories(out.out_dir);
    rows = KeptMetricsRows(out.out_dir / kMetricsFile, opt.step);
  }

  const OneCycleConfig sched = cfg.Schedule();
  const AdamWConfig adamw = cfg.Optimizer();
  const int n = cfg.batch_classes, m = cfg.positives;
  for (int64_t step = opt.step; step < total; ++step) {
    std::seed_seq seq{static_cast<uint32_t>(cfg.seed),
                      static_cast<uint32_t>(cfg.seed >> 32),
                      static_cast<uint32_t>(step),
                      static_cast<uint32_t>(step >> 32)};
    std::mt19937_64 rng(seq);
    SampledBatch b = SampleBatch(pool, n, m, rng);
    std::vector<FeatureSequence> audio;
    audio.reserve(n * m);
    for (const auto &inst : b.instances)
      for (int r : inst) audio.push_back(data.features[r]);

    StepMetrics sm;
    sm.step = step;
    sm.epoch = static_cast<int>(step / spe) + 1;
    sm.lr = OneCycleLr(step, total, sched);
    sm.exp_tau = LogitScale(params);
    sm.with_replacement = b.with_replacement;
    ParamStore grads = params.ZerosLike();
    TotalLossValue v = PipelineLoss(params, enc, audio, b.texts, m, cfg.weights,
                                    cfg.dwd, &grads);
    if (!std::isfinite(v.total))
      AWE_ERR("non-finite loss at step ", step, " (clap ", v.clap, ", dwd ",
              v.dwd.total, ")");
    sm.loss = v.total;
    sm.clap = v.clap;
    sm.dwd = v.dwd.total;
    sm.grad_norm = ClipGlobalNorm(&grads, cfg.clip_norm);
    AdamWStep(&params, grads, &opt, sm.lr, adamw);
    if (!params.AllFinite()) AWE_ERR("parameters became non-finite at step ", step);

    result.metrics.push_back(sm);
    rows.push_back(FormatMetricsRow(sm));
    if (out.on_step) out.on_step(sm);

    if ((step + 1) % spe == 0 && write) {
      int epoch = static_cast<int>((step + 1) / spe);
      auto ckpt = EpochCheckpointPath(out.out_dir, epoch);
      SaveParamStore(params, ckpt);
      SaveOptState(opt, OptStatePath(ckpt));
      WriteMetrics(out.out_dir / kMetricsFile, rows);
    }
  }
  if (write) SaveParamStore(params, out.out_dir / kFinalModel);
  return result;
}

}  // namespace awe
