// losses/contrastive-loss.cc

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

#include "losses/contrastive-loss.h"

#include <cmath>

namespace awe {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kMinCentroidNorm = 1e-12;

// log sum_k exp(v_k), computed stably.
template <typename Vec>
double LogSumExp(const Vec &v) {
  double mx = v.maxCoeff();
  return mx + std::log((v.array() - mx).exp().sum());
}

// Cosine of e and c with its gradients with respect to both.
double Cosine(const VectorXd &e, const VectorXd &c, VectorXd *de,
              VectorXd *dc) {
  double ne = e.norm(), nc = c.norm();
  if (nc <= kMinCentroidNorm) AWE_ERR("degenerate centroid (zero norm)");
  AWE_CHECK(ne > 0.0, "zero-norm embedding in DWD batch");
  double cos = e.dot(c) / (ne * nc);
  if (de) *de = c / (ne * nc) - cos * e / (ne * ne);
  if (dc) *dc = e / (ne * nc) - cos * c / (nc * nc);
  return cos;
}

void CheckDwdShape(const DwdBatch &b) {
  AWE_CHECK(b.num_classes >= 1 && b.num_instances >= 1,
            "DWD batch needs at least one class and one instance");
  AWE_CHECK(b.embeddings.rows() ==
                static_cast<Eigen::Index>(b.num_classes) * b.num_instances,
            "DWD batch has ", b.embeddings.rows(), " rows, expected ",
            b.num_classes, " x ", b.num_instances);
}

}  // namespace

double ClampedScale(double tau) {
  return std::min(std::exp(tau), kMaxLogitScale);
}

double ClampedScaleDerivative(double tau) {
  double s = std::exp(tau);
  return s > kMaxLogitScale ? 0.0 : s;
}

SimilarityMatrix ComputeSimilarity(const MatrixXd &e_t, const MatrixXd &e_a,
                                   double tau) {
  AWE_CHECK(e_t.rows() == e_a.rows() && e_t.cols() == e_a.cols(),
            "similarity inputs differ in shape: ", e_t.rows(), "x", e_t.cols(),
            " vs ", e_a.rows(), "x", e_a.cols());
  SimilarityMatrix c;
  c.scores = std::exp(tau) * (e_t * e_a.transpose());
  c.scaled = true;
  return c;
}

ClapLossValue ClapLoss(const MatrixXd &c, MatrixXd *d_scores) {
  AWE_CHECK(c.rows() == c.cols() && c.rows() >= 1,
            "similarity matrix must be square and non-empty, got ", c.rows(),
            "x", c.cols());
  const Eigen::Index n = c.rows();
  VectorXd row_lse(n), col_lse(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    row_lse(i) = LogSumExp(c.row(i));
    col_lse(i) = LogSumExp(c.col(i));
  }
  ClapLossValue v;
  v.audio = (row_lse - c.diagonal()).mean();
  v.text = (col_lse - c.diagonal()).mean();
  v.total = 0.5 * (v.audio + v.text);
  if (d_scores) {
    MatrixXd p_row = (c.colwise() - row_lse).array().exp();
    MatrixXd p_col = (c.rowwise() - col_lse.transpose()).array().exp();
    MatrixXd eye = MatrixXd::Identity(n, n);
    *d_scores = (0.5 / n) * ((p_row - eye) + (p_col - eye));
  }
  return v;
}

DwdBatch::DwdBatch(int n, int m, MatrixXd e)
    : num_classes(n), num_instances(m), embeddings(std::move(e)) {
  CheckDwdShape(*this);
}

LossGradients LossGradients::Zeros(int n_text, int n_audio, int dim) {
  LossGradients g;
  g.text = MatrixXd::Zero(n_text, dim);
  g.audio = MatrixXd::Zero(n_audio, dim);
  return g;
}

double ClapLossMulti(const MatrixXd &e_t, const DwdBatch &batch, double tau,
                     LossGradients *grads) {
  CheckDwdShape(batch);
  const int N = batch.num_classes, M = batch.num_instances;
  AWE_CHECK(e_t.rows() == N && e_t.cols() == batch.Dim(),
            "text embeddings are ", e_t.rows(), "x", e_t.cols(), ", expected ",
            N, "x", batch.Dim());
  const double s = ClampedScale(tau);
  double loss = 0.0;
  MatrixXd slice(N, batch.Dim()), dc;
  for (int m = 0; m < M; ++m) {
    for (int j = 0; j < N; ++j) slice.row(j) = batch.embeddings.row(batch.Row(j, m));
    MatrixXd g = e_t * slice.transpose();
    loss += ClapLoss(s * g, grads ? &dc : nullptr).total / M;
    if (grads) {
      dc /= M;
      grads->text += s * dc * slice;
      MatrixXd d_slice = s * dc.transpose() * e_t;
      for (int j = 0; j < N; ++j) grads->audio.row(batch.Row(j, m)) += d_slice.row(j);
      grads->tau += ClampedScaleDerivative(tau) * (dc.array() * g.array()).sum();
    }
  }
  return loss;
}

DwdCentroids ComputeDwdCentroids(const DwdBatch &batch) {
  CheckDwdShape(batch);
  const int N = batch.num_classes, M = batch.num_instances;
  if (M < 2) AWE_ERR("DWD needs at least 2 instances per class, got ", M);
  DwdCentroids c;
  c.full.resize(N, batch.Dim());
  c.loo.resize(batch.embeddings.rows(), batch.Dim());
  for (int j = 0; j < N; ++j) {
    VectorXd sum = batch.embeddings.middleRows(batch.Row(j, 0), M)
                       .colwise().sum().transpose();
    c.full.row(j) = sum.transpose() / M;
    for (int i = 0; i < M; ++i)
      c.loo.row(batch.Row(j, i)) =
          (sum.transpose() - batch.embeddings.row(batch.Row(j, i))) / (M - 1);
  }
  return c;
}

MatrixXd DwdSimilarities(const DwdBatch &batch, const DwdCentroids &cent) {
  const int N = batch.num_classes, M = batch.num_instances;
  MatrixXd s(batch.embeddings.rows(), N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < M; ++i) {
      Eigen::Index r = batch.Row(j, i);
      VectorXd e = batch.embeddings.row(r).transpose();
      for (int k = 0; k < N; ++k) {
        VectorXd c = (k == j ? cent.loo.row(r) : cent.full.row(k)).transpose();
        s(r, k) = Cosine(e, c, nullptr, nullptr);
      }
    }
  }
  return s;
}

DwdLossValue DwdLoss(const DwdBatch &batch, const DwdOptions &opts, double tau,
                     LossGradients *grads) {
  CheckDwdShape(batch);
  const int N = batch.num_classes, M = batch.num_instances, D = batch.Dim();
  if (N < 2) AWE_ERR("DWD needs at least 2 classes, got ", N);
  DwdCentroids cent = ComputeDwdCentroids(batch);
  MatrixXd sim = DwdSimilarities(batch, cent);
  const double reduce = opts.mean_reduction ? 1.0 / (N * M) : 1.0;
  const double scale = opts.temperature_scaled ? ClampedScale(tau) : 1.0;

  DwdLossValue v;
  MatrixXd d_sim;
  if (grads) d_sim = MatrixXd::Zero(sim.rows(), N);
  double d_scale = 0.0;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < M; ++i) {
      Eigen::Index r = batch.Row(j, i);
      VectorXd logits = scale * sim.row(r).transpose();
      double lse = LogSumExp(logits);
      v.softmax += reduce * (lse - logits(j));
      int best = -1;
      for (int k = 0; k < N; ++k)
        if (k != j && (best < 0 || sim(r, k) > sim(r, best))) best = k;
      v.centroid += reduce * ((1.0 - sim(r, j)) + sim(r, best));
      if (grads) {
        VectorXd p = (logits.array() - lse).exp();
        VectorXd d_row = reduce * scale * p;
        d_row(j) -= reduce * scale;
        d_row(j) -= reduce;
        d_row(best) += reduce;
        d_sim.row(r) = d_row.transpose();
        d_scale += reduce * (p.dot(sim.row(r).transpose()) - sim(r, j));
      }
    }
  }
  v.total = v.softmax + v.centroid;
  if (!grads) return v;

  // Chain through the cosines into embeddings and centroids, then through
  // the centroids (means) back into the embeddings.
  MatrixXd d_loo = MatrixXd::Zero(sim.rows(), D);
  MatrixXd d_full = MatrixXd::Zero(N, D);
  VectorXd de, dc;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < M; ++i) {
      Eigen::Index r = batch.Row(j, i);
      VectorXd e = batch.embeddings.row(r).transpose();
      for (int k = 0; k < N; ++k) {
        if (d_sim(r, k) == 0.0) continue;
        bool own = k == j;
        VectorXd c = (own ? cent.loo.row(r) : cent.full.row(k)).transpose();
        Cosine(e, c, &de, &dc);
        grads->audio.row(r) += d_sim(r, k) * de.transpose();
        if (own)
          d_loo.row(r) += d_sim(r, k) * dc.transpose();
        else
          d_full.row(k) += d_sim(r, k) * dc.transpose();
      }
    }
  }
  for (int j = 0; j < N; ++j) {
    Eigen::RowVectorXd loo_sum = d_loo.middleRows(batch.Row(j, 0), M).colwise().sum();
    for (int i = 0; i < M; ++i) {
      Eigen::Index r = batch.Row(j, i);
      grads->audio.row(r) += (loo_sum - d_loo.row(r)) / (M - 1) + d_full.row(j) / M;
    }
  }
  if (opts.temperature_scaled) grads->tau += ClampedScaleDerivative(tau) * d_scale;
  return v;
}

void LossWeights::Validate() const {
  if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0))
    throw ConfigError("loss weights must be non-negative");
  if (alpha1 == 0.0 && alpha2 == 0.0)
    throw ConfigError("loss weights alpha1 and alpha2 are both zero");
}

TotalLossValue TotalLoss(const MatrixXd &e_t, const DwdBatch &batch,
                         double tau, const LossWeights &w,
                         const DwdOptions &opts, LossGradients *grads) {
  w.Validate();
  TotalLossValue v;
  if (!grads) {
    v.clap = ClapLossMulti(e_t, batch, tau);
    v.dwd = DwdLoss(batch, opts, tau);
  } else {
    LossGradients g_clap = LossGradients::Zeros(
        static_cast<int>(e_t.rows()), static_cast<int>(batch.embeddings.rows()),
        batch.Dim());
    LossGradients g_dwd = g_clap;
    v.clap = ClapLossMulti(e_t, batch, tau, &g_clap);
    v.dwd = DwdLoss(batch, opts, tau, &g_dwd);
    grads->text += w.alpha1 * g_clap.text;
    grads->audio += w.alpha1 * g_clap.audio + w.alpha2 * g_dwd.audio;
    grads->tau += w.alpha1 * g_clap.tau + w.alpha2 * g_dwd.tau;
  }
  v.total = w.alpha1 * v.clap + w.alpha2 * v.dwd.total;
  return v;
}

}  // namespace awe
