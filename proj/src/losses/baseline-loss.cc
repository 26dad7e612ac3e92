// losses/baseline-loss.cc

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

#include "losses/baseline-loss.h"

#include <cmath>
#include <vector>

namespace awe {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void BaselineConfig::Validate() const {
  if (!(margin >= 0.0)) throw ConfigError("baseline margin must be >= 0");
  if (!(ntxent_tau > 0.0)) throw ConfigError("ntxent_tau must be > 0");
  if (num_negatives < 0) throw ConfigError("num_negatives must be >= 0");
}

double CosineDistance(const VectorXd &u, const VectorXd &v, VectorXd *du,
                      VectorXd *dv) {
  AWE_CHECK(u.size() == v.size(), "cosine of vectors of different sizes");
  double nu = u.norm(), nv = v.norm();
  AWE_CHECK(nu > 0.0 && nv > 0.0, "cosine distance of a zero-norm vector");
  double cos = u.dot(v) / (nu * nv);
  if (du) *du = -(v / (nu * nv) - cos * u / (nu * nu));
  if (dv) *dv = -(u / (nu * nv) - cos * v / (nv * nv));
  return 1.0 - cos;
}

double SiameseHinge(const VectorXd &a, const VectorXd &p, const VectorXd &n,
                    double margin, VectorXd *da, VectorXd *dp, VectorXd *dn) {
  VectorXd da_p, dp_p, da_n, dn_n;
  double d_pos = CosineDistance(a, p, &da_p, &dp_p);
  double d_neg = CosineDistance(a, n, &da_n, &dn_n);
  double h = margin + d_pos - d_neg;
  bool active = h > 0.0;
  if (da) *da = active ? VectorXd(da_p - da_n) : VectorXd::Zero(a.size());
  if (dp) *dp = active ? dp_p : VectorXd::Zero(p.size());
  if (dn) *dn = active ? VectorXd(-dn_n) : VectorXd::Zero(n.size());
  return active ? h : 0.0;
}

double MultiviewHinge(const VectorXd &audio, const VectorXd &text_pos,
                      const VectorXd &text_neg, double margin,
                      VectorXd *d_audio, VectorXd *d_text_pos,
                      VectorXd *d_text_neg) {
  return SiameseHinge(audio, text_pos, text_neg, margin, d_audio, d_text_pos,
                      d_text_neg);
}

double NtXent(const VectorXd &a, const VectorXd &p, const MatrixXd &negatives,
              double tau, VectorXd *da, VectorXd *dp, MatrixXd *dneg) {
  AWE_CHECK(tau > 0.0, "NT-Xent temperature must be positive");
  AWE_CHECK(negatives.rows() == 0 || negatives.cols() == a.size(),
            "negatives have width ", negatives.cols(), ", expected ", a.size());
  const Eigen::Index K = negatives.rows();
  // Candidate 0 is the positive, 1..K the negatives; sim = 1 - cosine distance.
  std::vector<VectorXd> d_anchor(K + 1), d_cand(K + 1);
  VectorXd logits(K + 1);
  for (Eigen::Index k = 0; k <= K; ++k) {
    VectorXd c = k == 0 ? p : VectorXd(negatives.row(k - 1).transpose());
    logits(k) = (1.0 - CosineDistance(a, c, &d_anchor[k], &d_cand[k])) / tau;
  }
  double mx = logits.maxCoeff();
  double lse = mx + std::log((logits.array() - mx).exp().sum());
  double loss = lse - logits(0);
  if (da || dp || dneg) {
    VectorXd w = (logits.array() - lse).exp();  // softmax
    w(0) -= 1.0;
    // d logit_k / d x = -(d distance / d x) / tau.
    VectorXd ga = VectorXd::Zero(a.size());
    for (Eigen::Index k = 0; k <= K; ++k) ga -= w(k) / tau * d_anchor[k];
    if (da) *da = ga;
    if (dp) *dp = -w(0) / tau * d_cand[0];
    if (dneg) {
      dneg->resize(K, a.size());
      for (Eigen::Index k = 1; k <= K; ++k)
        dneg->row(k - 1) = (-w(k) / tau * d_cand[k]).transpose();
    }
  }
  return loss;
}

double CaeReconstruction(const RowMatrixXd &target, const RowMatrixXd &pred,
                         RowMatrixXd *d_pred) {
  AWE_CHECK(target.rows() == pred.rows() && target.cols() == pred.cols(),
            "reconstruction shape mismatch: ", target.rows(), "x",
            target.cols(), " vs ", pred.rows(), "x", pred.cols());
  RowMatrixXd diff = pred - target;
  if (d_pred) *d_pred = 2.0 * diff;
  return diff.squaredNorm();
}

}  // namespace awe
