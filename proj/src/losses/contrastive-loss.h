// losses/contrastive-loss.h

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

#ifndef AWE_LOSSES_CONTRASTIVE_LOSS_H_
#define AWE_LOSSES_CONTRASTIVE_LOSS_H_

#include "base/awe-common.h"

namespace awe {

/// C = s * E_t E_a^T. Rows index text queries, columns audio segments.
struct SimilarityMatrix {
  Eigen::MatrixXd scores;
  bool scaled = false;
};

/// Multiplier applied to similarities for log-temperature `tau`:
/// min(exp(tau), kMaxLogitScale).
double ClampedScale(double tau);
/// d ClampedScale / d tau (zero where the clamp is active).
double ClampedScaleDerivative(double tau);

/// C[i][j] = exp(tau) * (e_t row i . e_a row j). The exponent is not clamped
/// here; the training losses below clamp it.
SimilarityMatrix ComputeSimilarity(const Eigen::MatrixXd &e_t,
                                   const Eigen::MatrixXd &e_a, double tau);

struct ClapLossValue {
  double audio = 0.0;  // mean over rows of -log softmax(row)[diag]
  double text = 0.0;   // mean over columns of -log softmax(column)[diag]
  double total = 0.0;  // (audio + text) / 2
};

/// Symmetric cross-entropy over a square similarity matrix. If `d_scores` is
/// non-null it receives d total / d C.
ClapLossValue ClapLoss(const Eigen::MatrixXd &c,
                       Eigen::MatrixXd *d_scores = nullptr);

/// N word classes with M audio instances each, stored as an (N*M) x D matrix
/// with instance i of class j in row j*M + i.
struct DwdBatch {
  int num_classes = 0;
  int num_instances = 0;
  Eigen::MatrixXd embeddings;

  DwdBatch() = default;
  DwdBatch(int n, int m, Eigen::MatrixXd e);
  Eigen::Index Row(int j, int i) const {
    return static_cast<Eigen::Index>(j) * num_instances + i;
  }
  int Dim() const { return static_cast<int>(embeddings.cols()); }
};

/// Gradients of a loss with respect to its inputs. Loss functions add into
/// these; callers start from Zeros().
struct LossGradients {
  Eigen::MatrixXd text;   // N x D
  Eigen::MatrixXd audio;  // (N*M) x D
  double tau = 0.0;

  static LossGradients Zeros(int n_text, int n_audio, int dim);
};

/// Mean over instance slices m of ClapLoss(s * E_t E_a[m]^T), where E_a[m]
/// holds instance m of every class and s = ClampedScale(tau).
double ClapLossMulti(const Eigen::MatrixXd &e_t, const DwdBatch &batch,
                     double tau, LossGradients *grads = nullptr);

struct DwdCentroids {
  Eigen::MatrixXd loo;   // (N*M) x D: class mean without the instance itself
  Eigen::MatrixXd full;  // N x D
};

DwdCentroids ComputeDwdCentroids(const DwdBatch &batch);

/// (N*M) x N cosines: own class against the leave-one-out centroid, other
/// classes against the full centroid.
Eigen::MatrixXd DwdSimilarities(const DwdBatch &batch,
                                const DwdCentroids &centroids);

struct DwdOptions {
  // Divide both terms by N*M instead of summing.
  bool mean_reduction = false;
  // Multiply the softmax-term logits by ClampedScale(tau).
  bool temperature_scaled = false;
};

struct DwdLossValue {
  double softmax = 0.0;   // L_sm
  double centroid = 0.0;  // L_cc
  double total = 0.0;     // L_sm + L_cc
};

DwdLossValue DwdLoss(const DwdBatch &batch, const DwdOptions &opts = {},
                     double tau = 0.0, LossGradients *grads = nullptr);

struct LossWeights {
  double alpha1 = 0.1;  // audio-text term
  double alpha2 = 1.0;  // audio-audio term
  void Validate() const;
};

struct TotalLossValue {
  double clap = 0.0;
  DwdLossValue dwd;
  double total = 0.0;
};

/// alpha1 * ClapLossMulti + alpha2 * DWD total.
TotalLossValue TotalLoss(const Eigen::MatrixXd &e_t, const DwdBatch &batch,
                         double tau, const LossWeights &weights,
                         const DwdOptions &opts = {},
                         LossGradients *grads = nullptr);

}  // namespace awe

#endif  // AWE_LOSSES_CONTRASTIVE_LOSS_H_
