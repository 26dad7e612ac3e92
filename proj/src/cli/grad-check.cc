// cli/grad-check.cc

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


#include "cli/grad-check.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "encoders/encoder.h"
#include "losses/baseline-loss.h"
#include "losses/contrastive-loss.h"
#include "training/trainer.h"

namespace awe {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kN = 3;
constexpr int kM = 2;
constexpr int kD = 5;

class Fixtures {
 public:
  explicit Fixtures(uint64_t seed) : rng_(seed) {}

  MatrixXd Gaussian(int rows, int cols) {
    std::normal_distribution<double> g;
    MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = g(rng_);
    return m;
  }
  VectorXd GaussianVector(int n) { return Gaussian(n, 1).col(0); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int UniformInt(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

// Packs matrices (column-major) and trailing scalars into one vector.
class Packer {
 public:
  void AddMatrix(const MatrixXd &m) {
    shapes_.push_back({m.rows(), m.cols()});
    parts_.push_back(Eigen::Map<const VectorXd>(m.data(), m.size()));
  }
  void AddScalar(double v) { AddMatrix(MatrixXd::Constant(1, 1, v)); }
  VectorXd Pack() const {
    Eigen::Index n = 0;
    for (const auto &p : parts_) n += p.size();
    VectorXd out(n);
    n = 0;
    for (const auto &p : parts_) {
      out.segment(n, p.size()) = p;
      n += p.size();
    }
    return out;
  }
  std::vector<MatrixXd> Unpack(const VectorXd &x) const {
    std::vector<MatrixXd> out;
    Eigen::Index n = 0;
    for (const auto &[r, c] : shapes_) {
      out.push_back(Eigen::Map<const MatrixXd>(x.data() + n, r, c));
      n += r * c;
    }
    return out;
  }

 private:
  std::vector<std::pair<Eigen::Index, Eigen::Index>> shapes_;
  std::vector<VectorXd> parts_;
};

GradCheckResult Finish(const std::string &name, double err, double tol,
                       int64_t n) {
  return {name, err, tol, n, err <= tol};
}

GradCheckResult CheckPacked(
    const std::string &name, const Packer &layout, const VectorXd &x,
    const VectorXd &analytic,
    const std::function<double(const std::vector<MatrixXd> &)> &loss) {
  auto f = [&](const VectorXd &v) { return loss(layout.Unpack(v)); };
  return Finish(name, MaxFiniteDifferenceError(f, x, analytic),
                kLossTolerance, x.size());
}

GradCheckResult CheckClap(Fixtures *fx) {
  MatrixXd c = 5.0 * fx->Gaussian(kN, kN), d;
  ClapLoss(c, &d);
  Packer p;
  p.AddMatrix(c);
  Packer g;
  g.AddMatrix(d);
  return CheckPacked("clap", p, p.Pack(), g.Pack(),
                     [](const std::vector<MatrixXd> &v) {
                       return ClapLoss(v[0]).total;
                     });
}

struct EmbeddingFixture {
  MatrixXd e_t, e_a;
  double tau;
};

EmbeddingFixture MakeEmbeddings(Fixtures *fx) {
  return {fx->Gaussian(kN, kD), fx->Gaussian(kN * kM, kD),
          fx->Uniform(0.0, std::log(20.0))};
}

// Checks a loss of (e_t, e_a, tau) whose analytic gradients land in a
// LossGradients.
GradCheckResult CheckEmbeddingLoss(
    const std::string &name, const EmbeddingFixture &e,
    const std::function<double(const MatrixXd &, const DwdBatch &, double,
                               LossGradients *)> &loss) {
  LossGradients grads = LossGradients::Zeros(kN, kN * kM, kD);
  loss(e.e_t, DwdBatch(kN, kM, e.e_a), e.tau, &grads);
  Packer p, g;
  p.AddMatrix(e.e_t);
  p.AddMatrix(e.e_a);
  p.AddScalar(e.tau);
  g.AddMatrix(grads.text);
  g.AddMatrix(grads.audio);
  g.AddScalar(grads.tau);
  return CheckPacked(name, p, p.Pack(), g.Pack(),
                     [&](const std::vector<MatrixXd> &v) {
                       return loss(v[0], DwdBatch(kN, kM, v[1]), v[2](0, 0),
                                   nullptr);
                     });
}

GradCheckResult CheckTriplet(
    const std::string &name, Fixtures *fx,
    double (*loss)(const VectorXd &, const VectorXd &, const VectorXd &,
                   double, VectorXd *, VectorXd *, VectorXd *)) {
  // A margin above the largest cosine distance keeps the hinge active.
  const double margin = 2.5;
  VectorXd a = fx->GaussianVector(kD), pos = fx->GaussianVector(kD),
           neg = fx->GaussianVector(kD), da, dp, dn;
  loss(a, pos, neg, margin, &da, &dp, &dn);
  Packer p, g;
  p.AddMatrix(a);
  p.AddMatrix(pos);
  p.AddMatrix(neg);
  g.AddMatrix(da);
  g.AddMatrix(dp);
  g.AddMatrix(dn);
  return CheckPacked(name, p, p.Pack(), g.Pack(),
                     [&](const std::vector<MatrixXd> &v) {
                       return loss(v[0].col(0), v[1].col(0), v[2].col(0),
                                   margin, nullptr, nullptr, nullptr);
                     });
}

GradCheckResult CheckNtXent(Fixtures *fx) {
  const double tau = 0.1;
  VectorXd a = fx->GaussianVector(kD), pos = fx->GaussianVector(kD), da, dp;
  MatrixXd neg = fx->Gaussian(kN, kD), dn;
  NtXent(a, pos, neg, tau, &da, &dp, &dn);
  Packer p, g;
  p.AddMatrix(a);
  p.AddMatrix(pos);
  p.AddMatrix(neg);
  g.AddMatrix(da);
  g.AddMatrix(dp);
  g.AddMatrix(dn);
  return CheckPacked("ntxent", p, p.Pack(), g.Pack(),
                     [&](const std::vector<MatrixXd> &v) {
                       return NtXent(v[0].col(0), v[1].col(0), v[2], tau);
                     });
}

GradCheckResult CheckCae(Fixtures *fx) {
  RowMatrixXd target = fx->Gaussian(4, 3), pred = fx->Gaussian(4, 3), d;
  CaeReconstruction(target, pred, &d);
  Packer p, g;
  p.AddMatrix(pred);
  g.AddMatrix(d);
  return CheckPacked("cae", p, p.Pack(), g.Pack(),
                     [&](const std::vector<MatrixXd> &v) {
                       return CaeReconstruction(target, v[0]);
                     });
}

VectorXd FlattenParams(const ParamStore &params) {
  std::vector<double> all;
  for (const auto &[name, t] : params)
    all.insert(all.end(), t.data.begin(), t.data.end());
  return Eigen::Map<const VectorXd>(all.data(), all.size());
}

void UnflattenParams(const VectorXd &x, ParamStore *params) {
  Eigen::Index n = 0;
  for (auto &[name, t] : *params)
    for (double &v : t.data) v = x(n++);
}

GradCheckResult CheckPipeline(const std::string &name, EncoderConfig enc,
                              Fixtures *fx, uint64_t seed) {
  enc.hidden = 4;
  enc.embed_dim = kD;
  enc.feat_dim = 3;
  enc.text_vocab = 4;
  enc.text_embed_dim = 3;
  ParamStore params = InitParams(enc, seed);
  // Move every parameter away from its structured initial value.
  for (auto &[pname, t] : params)
    for (double &v : t.data) v += 0.1 * fx->Uniform(-1.0, 1.0);
  params.Get(kLogTemperatureName).Scalar() = fx->Uniform(0.5, 3.0);

  std::vector<FeatureSequence> audio(kN * kM);
  for (auto &seq : audio) {
    int t = fx->UniformInt(3, 7);
    seq.frames = fx->Gaussian(t, enc.feat_dim).cast<float>();
  }
  std::vector<PhonemeSequence> texts(kN);
  for (auto &text : texts) {
    text.resize(fx->UniformInt(2, 4));
    for (int &ph : text) ph = fx->UniformInt(0, enc.text_vocab - 1);
  }
  const LossWeights weights{fx->Uniform(0.1, 1.0), fx->Uniform(0.1, 1.0)};
  const DwdOptions dwd;

  ParamStore grads = params.ZerosLike();
  PipelineLoss(params, enc, audio, texts, kM, weights, dwd, &grads);
  ParamStore probe = params;
  auto f = [&](const VectorXd &x) {
    UnflattenParams(x, &probe);
    return PipelineLoss(probe, enc, audio, texts, kM, weights, dwd, nullptr)
        .total;
  };
  VectorXd x = FlattenParams(params);
  return Finish(name, MaxFiniteDifferenceError(f, x, FlattenParams(grads)),
                kPipelineTolerance, x.size());
}

}  // namespace

double RelativeError(double analytic, double numeric) {
  double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-3});
  return std::abs(analytic - numeric) / denom;
}

double MaxFiniteDifferenceError(
    const std::function<double(const VectorXd &)> &f, const VectorXd &x,
    const VectorXd &analytic, double h) {
  AWE_CHECK(x.size() == analytic.size(), "gradient has ", analytic.size(),
            " entries for ", x.size(), " inputs");
  double worst = 0.0;
  VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + h;
    double up = f(probe);
    probe(i) = x(i) - h;
    double down = f(probe);
    probe(i) = x(i);
    double numeric = (up - down) / (2.0 * h);
    double err = RelativeError(analytic(i), numeric);
    if (!(err <= worst)) worst = err;  // NaN propagates as a failure
  }
  return worst;
}

std::vector<GradCheckResult> RunGradientChecks(uint64_t seed) {
  Fixtures fx(seed);
  std::vector<GradCheckResult> out;
  out.push_back(CheckClap(&fx));

  auto clap_multi = [](const MatrixXd &t, const DwdBatch &b, double tau,
                       LossGradients *g) { return ClapLossMulti(t, b, tau, g); };
  out.push_back(CheckEmbeddingLoss("clap_multi", MakeEmbeddings(&fx), clap_multi));

  const std::pair<const char *, DwdOptions> dwd_variants[] = {
      {"dwd_sum", {false, false}},
      {"dwd_mean", {true, false}},
      {"dwd_scaled", {false, true}}};
  for (const auto &[name, opts] : dwd_variants) {
    DwdOptions o = opts;
    out.push_back(CheckEmbeddingLoss(
        name, MakeEmbeddings(&fx),
        [o](const MatrixXd &, const DwdBatch &b, double tau, LossGradients *g) {
          return DwdLoss(b, o, tau, g).total;
        }));
  }

  LossWeights w{fx.Uniform(0.1, 1.0), fx.Uniform(0.1, 1.0)};
  out.push_back(CheckEmbeddingLoss(
      "total", MakeEmbeddings(&fx),
      [w](const MatrixXd &t, const DwdBatch &b, double tau, LossGradients *g) {
        return TotalLoss(t, b, tau, w, {}, g).total;
      }));

  out.push_back(CheckTriplet("siamese_hinge", &fx, &SiameseHinge));
  out.push_back(CheckTriplet("multiview_hinge", &fx, &MultiviewHinge));
  out.push_back(CheckNtXent(&fx));
  out.push_back(CheckCae(&fx));

  EncoderConfig pooled;
  pooled.kind = EncoderKind::kPooled;
  out.push_back(CheckPipeline("pipeline_pooled", pooled, &fx, seed));

  EncoderConfig uni;
  uni.kind = EncoderKind::kRecurrent;
  uni.layers = 1;
  uni.bidirectional = false;
  out.push_back(CheckPipeline("pipeline_recurrent_uni", uni, &fx, seed));

  EncoderConfig bi;
  bi.kind = EncoderKind::kRecurrent;
  bi.layers = 2;
  bi.bidirectional = true;
  out.push_back(CheckPipeline("pipeline_recurrent_bi", bi, &fx, seed));
  return out;
}

}  // namespace awe
