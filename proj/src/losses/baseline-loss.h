// losses/baseline-loss.h

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

#ifndef AWE_LOSSES_BASELINE_LOSS_H_
#define AWE_LOSSES_BASELINE_LOSS_H_

#include "base/awe-common.h"

// Objectives of earlier acoustic word embedding systems, kept as plain
// functions of embeddings so they can be compared against the joint loss.
// Gradient outputs are optional and overwritten (not accumulated).

namespace awe {

struct BaselineConfig {
  double margin = 0.5;
  double ntxent_tau = 0.1;
  int num_negatives = 1;
  void Validate() const;
};

/// 1 - u.v / (|u| |v|). Throws on a zero-norm input.
double CosineDistance(const Eigen::VectorXd &u, const Eigen::VectorXd &v,
                      Eigen::VectorXd *du = nullptr,
                      Eigen::VectorXd *dv = nullptr);

/// max(0, m + d(a, p) - d(a, n)) with cosine distance d.
double SiameseHinge(const Eigen::VectorXd &anchor,
                    const Eigen::VectorXd &positive,
                    const Eigen::VectorXd &negative, double margin,
                    Eigen::VectorXd *d_anchor = nullptr,
                    Eigen::VectorXd *d_positive = nullptr,
                    Eigen::VectorXd *d_negative = nullptr);

/// max(0, m + d(f(x+), g(c+)) - d(f(x+), g(c-))): the same hinge with an
/// acoustic anchor and written-word positive and negative.
double MultiviewHinge(const Eigen::VectorXd &audio,
                      const Eigen::VectorXd &text_pos,
                      const Eigen::VectorXd &text_neg, double margin,
                      Eigen::VectorXd *d_audio = nullptr,
                      Eigen::VectorXd *d_text_pos = nullptr,
                      Eigen::VectorXd *d_text_neg = nullptr);

/// -log softmax over {p, n_1..n_K} of cos(a, .) / tau, at p. With no
/// negatives the loss is 0.
double NtXent(const Eigen::VectorXd &anchor, const Eigen::VectorXd &positive,
              const Eigen::MatrixXd &negatives, double tau,
              Eigen::VectorXd *d_anchor = nullptr,
              Eigen::VectorXd *d_positive = nullptr,
              Eigen::MatrixXd *d_negatives = nullptr);

/// Sum over frames of the squared Euclidean error between two T x F
/// sequences; the gradient is with respect to `predicted`.
double CaeReconstruction(const RowMatrixXd &target,
                         const RowMatrixXd &predicted,
                         RowMatrixXd *d_predicted = nullptr);

}  // namespace awe

#endif  // AWE_LOSSES_BASELINE_LOSS_H_
