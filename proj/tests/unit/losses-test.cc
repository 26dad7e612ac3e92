// unit/losses-test.cc

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


#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "losses/baseline-loss.h"
#include "losses/contrastive-loss.h"
#include "unit/test-util.h"

namespace awe {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ----- Naive loop oracles ---------------------------------------------------

double OracleClap(const MatrixXd &c) {
  const int n = static_cast<int>(c.rows());
  double audio = 0.0, text = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int k = 0; k < n; ++k) {
      row += std::exp(c(i, k));
      col += std::exp(c(k, i));
    }
    audio += -c(i, i) + std::log(row);
    text += -c(i, i) + std::log(col);
  }
  return 0.5 * (audio / n + text / n);
}

double OracleClapMulti(const MatrixXd &et, const MatrixXd &ea, int n, int m,
                       double tau) {
  double total = 0.0;
  for (int s = 0; s < m; ++s) {
    MatrixXd c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int d = 0; d < et.cols(); ++d) dot += et(i, d) * ea(j * m + s, d);
        c(i, j) = std::exp(tau) * dot;
      }
    total += OracleClap(c);
  }
  return total / m;
}

double OracleCos(const VectorXd &a, const VectorXd &b) {
  double ab = 0, aa = 0, bb = 0;
  for (int d = 0; d < a.size(); ++d) {
    ab += a(d) * b(d);
    aa += a(d) * a(d);
    bb += b(d) * b(d);
  }
  return ab / std::sqrt(aa * bb);
}

// Rows: instance (j, i) at j * m + i. Columns: class k.
MatrixXd OracleDwdSim(const MatrixXd &e, int n, int m) {
  MatrixXd s(n * m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < n; ++k) {
        VectorXd c = VectorXd::Zero(e.cols());
        int count = 0;
        for (int q = 0; q < m; ++q) {
          if (k == j && q == i) continue;
          c += e.row(k * m + q).transpose();
          ++count;
        }
        c /= count;
        s(j * m + i, k) = OracleCos(e.row(j * m + i).transpose(), c);
      }
  return s;
}

void OracleDwd(const MatrixXd &e, int n, int m, double *sm, double *cc) {
  MatrixXd s = OracleDwdSim(e, n, m);
  *sm = *cc = 0.0;
  for (int r = 0; r < n * m; ++r) {
    int j = r / m;
    double z = 0.0, best = -1e300;
    for (int k = 0; k < n; ++k) {
      z += std::exp(s(r, k));
      if (k != j) best = std::max(best, s(r, k));
    }
    *sm += -s(r, j) + std::log(z);
    *cc += (1.0 - s(r, j)) + best;
  }
}

struct Fixture {
  int n, m;
  MatrixXd text, audio;
  double tau;
};

Fixture RandomFixture(std::mt19937_64 *rng) {
  Fixture f;
  f.n = testing::RandomInt(rng, 2, 5);
  f.m = testing::RandomInt(rng, 2, 4);
  int d = testing::RandomInt(rng, 2, 6);
  f.text = testing::RandomUnitRows(rng, f.n, d);
  f.audio = testing::RandomUnitRows(rng, f.n * f.m, d);
  f.tau = testing::RandomReal(rng, -1.0, 3.0);
  return f;
}

// ----- Similarity and CLAP --------------------------------------------------

TEST(SimilarityTest, Examples) {
  MatrixXd eye = MatrixXd::Identity(3, 3);
  EXPECT_LT((ComputeSimilarity(eye, eye, 0.0).scores - eye).norm(), 1e-12);
  MatrixXd u(1, 2);
  u << 0.6, 0.8;
  EXPECT_NEAR(ComputeSimilarity(u, u, std::log(2.0)).scores(0, 0), 2.0, 1e-12);
  EXPECT_THROW(ComputeSimilarity(eye, MatrixXd::Identity(2, 3), 0.0), Error);
}

TEST(SimilarityTest, MatchesLoopOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Fixture f = RandomFixture(&rng);
    MatrixXd a = f.audio.topRows(f.n);
    MatrixXd c = ComputeSimilarity(f.text, a, f.tau).scores;
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < f.n; ++j) {
        double dot = 0.0;
        for (int d = 0; d < a.cols(); ++d) dot += f.text(i, d) * a(j, d);
        EXPECT_NEAR(c(i, j), std::exp(f.tau) * dot, 1e-12);
      }
  }
}

TEST(ClapLossTest, Examples) {
  EXPECT_NEAR(ClapLoss(MatrixXd::Constant(1, 1, 3.0)).total, 0.0, 1e-12);
  EXPECT_NEAR(ClapLoss(MatrixXd::Constant(2, 2, 0.7)).total, std::log(2.0), 1e-9);
  EXPECT_NEAR(ClapLoss(MatrixXd::Constant(2, 2, 0.7)).total, 0.693147, 1e-6);
  EXPECT_NEAR(ClapLoss(MatrixXd::Identity(2, 2)).total, 0.313262, 1e-6);
  EXPECT_NEAR(ClapLoss(MatrixXd::Identity(2, 2)).total,
              std::log(1.0 + std::exp(-1.0)), 1e-9);
  EXPECT_THROW(ClapLoss(MatrixXd::Zero(2, 3)), Error);
}

TEST(ClapLossTest, MatchesLoopOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = testing::RandomInt(&rng, 1, 8);
    MatrixXd c = 3.0 * testing::RandomGaussian(&rng, n, n);
    EXPECT_NEAR(ClapLoss(c).total, OracleClap(c), 1e-12);
  }
}

TEST(ClapLossTest, ShiftInvarianceProperty) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < testing::kPropertySeeds; ++s) {
    int n = testing::RandomInt(&rng, 2, 6);
    MatrixXd c = testing::RandomGaussian(&rng, n, n);
    int r = testing::RandomInt(&rng, 0, n - 1);
    double shift = testing::RandomReal(&rng, -5.0, 5.0);
    ClapLossValue base = ClapLoss(c);
    MatrixXd row_shifted = c;
    row_shifted.row(r).array() += shift;
    EXPECT_NEAR(ClapLoss(row_shifted).audio, base.audio, 1e-12);
    MatrixXd col_shifted = c;
    col_shifted.col(r).array() += shift;
    EXPECT_NEAR(ClapLoss(col_shifted).text, base.text, 1e-12);
  }
}

TEST(ClapLossTest, TransposeSwapsDirectionsProperty) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < testing::kPropertySeeds; ++s) {
    int n = testing::RandomInt(&rng, 1, 6);
    MatrixXd c = testing::RandomGaussian(&rng, n, n);
    ClapLossValue a = ClapLoss(c), b = ClapLoss(c.transpose());
    EXPECT_NEAR(a.audio, b.text, 1e-12);
    EXPECT_NEAR(a.text, b.audio, 1e-12);
    EXPECT_NEAR(a.total, b.total, 1e-12);
  }
}

TEST(ClapMultiTest, Examples) {
  std::mt19937_64 rng(5);
  MatrixXd et = testing::RandomUnitRows(&rng, 3, 4);
  MatrixXd ea = testing::RandomUnitRows(&rng, 3, 4);
  double single = ClapLoss(ComputeSimilarity(et, ea, 0.5).scores).total;
  EXPECT_NEAR(ClapLossMulti(et, DwdBatch(3, 1, ea), 0.5), single, 1e-12);
  MatrixXd repeated(6, 4);
  for (int j = 0; j < 3; ++j) repeated.row(2 * j) = repeated.row(2 * j + 1) = ea.row(j);
  EXPECT_NEAR(ClapLossMulti(et, DwdBatch(3, 2, repeated), 0.5), single, 1e-12);
  EXPECT_THROW(ClapLossMulti(et.topRows(2), DwdBatch(3, 2, repeated), 0.5), Error);
}

TEST(ClapMultiTest, MatchesLoopOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    Fixture f = RandomFixture(&rng);
    EXPECT_NEAR(ClapLossMulti(f.text, DwdBatch(f.n, f.m, f.audio), f.tau),
                OracleClapMulti(f.text, f.audio, f.n, f.m, f.tau), 1e-12);
  }
}

// ----- DWD ------------------------------------------------------------------

TEST(DwdTest, CentroidExamples) {
  MatrixXd e(4, 2);
  e << 1, 2, 3, 4, 5, 6, 7, 8;
  DwdCentroids c = ComputeDwdCentroids(DwdBatch(2, 2, e));
  EXPECT_EQ(c.loo.row(0), e.row(1));
  EXPECT_EQ(c.loo.row(1), e.row(0));
  EXPECT_EQ(c.loo.row(2), e.row(3));

  MatrixXd three(3, 2);
  three << 1, 0, 0, 1, 1, 1;
  DwdCentroids c3 = ComputeDwdCentroids(DwdBatch(1, 3, three));
  EXPECT_NEAR(c3.loo(0, 0), 0.5, 1e-12);
  EXPECT_NEAR(c3.loo(0, 1), 1.0, 1e-12);

  MatrixXd same = MatrixXd::Constant(3, 2, 0.25);
  DwdCentroids cs = ComputeDwdCentroids(DwdBatch(1, 3, same));
  EXPECT_LT((cs.loo.row(1) - same.row(0)).norm(), 1e-15);
  EXPECT_LT((cs.full.row(0) - same.row(0)).norm(), 1e-15);

  EXPECT_THROW(ComputeDwdCentroids(DwdBatch(2, 1, MatrixXd::Ones(2, 2))), Error);
}

TEST(DwdTest, SimilarityExamplesAndDegenerateCentroid) {
  MatrixXd e(4, 2);
  e << 1, 0, 1, 0, 0, 1, 0, 1;
  DwdBatch b(2, 2, e);
  MatrixXd s = DwdSimilarities(b, ComputeDwdCentroids(b));
  for (int r = 0; r < 4; ++r) {
    EXPECT_NEAR(s(r, r / 2), 1.0, 1e-12);
    EXPECT_NEAR(s(r, 1 - r / 2), 0.0, 1e-12);
  }
  MatrixXd cancel(4, 2);
  cancel << 1, 0, 1, 0, 0, 1, 0, -1;
  DwdBatch bad(2, 2, cancel);
  try {
    DwdSimilarities(bad, ComputeDwdCentroids(bad));
    FAIL() << "expected an error";
  } catch (const Error &err) {
    EXPECT_NE(std::string(err.what()).find("degenerate centroid"), std::string::npos);
  }
}

TEST(DwdTest, LossExample) {
  MatrixXd e(4, 2);
  e << 1, 0, 1, 0, 0, 1, 0, 1;
  DwdLossValue v = DwdLoss(DwdBatch(2, 2, e));
  EXPECT_NEAR(v.centroid, 0.0, 1e-12);
  EXPECT_NEAR(v.softmax, 4.0 * (-1.0 + std::log(std::exp(1.0) + 1.0)), 1e-9);
  EXPECT_NEAR(v.softmax, 1.253047, 1e-6);
  EXPECT_NEAR(v.total, v.softmax + v.centroid, 1e-15);
  EXPECT_THROW(DwdLoss(DwdBatch(1, 2, e.topRows(2))), Error);
}

TEST(DwdTest, CentroidTermContributesOffClassMaximum) {
  // Own class is exact (S = 1); the other class sits at cosine 0.6.
  MatrixXd e(4, 2);
  e << 1, 0, 1, 0, 0.6, 0.8, 0.6, 0.8;
  DwdBatch b(2, 2, e);
  MatrixXd s = DwdSimilarities(b, ComputeDwdCentroids(b));
  EXPECT_NEAR(s(0, 1), 0.6, 1e-12);
  EXPECT_NEAR(DwdLoss(b).centroid, 4 * 0.6, 1e-12);
}

TEST(DwdTest, MatchesLoopOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Fixture f = RandomFixture(&rng);
    DwdBatch b(f.n, f.m, f.audio);
    MatrixXd s = DwdSimilarities(b, ComputeDwdCentroids(b));
    EXPECT_LT((s - OracleDwdSim(f.audio, f.n, f.m)).cwiseAbs().maxCoeff(), 1e-12);
    double sm, cc;
    OracleDwd(f.audio, f.n, f.m, &sm, &cc);
    DwdLossValue v = DwdLoss(b);
    EXPECT_NEAR(v.softmax, sm, 1e-12);
    EXPECT_NEAR(v.centroid, cc, 1e-12);
    DwdOptions mean;
    mean.mean_reduction = true;
    EXPECT_NEAR(DwdLoss(b, mean).total, (sm + cc) / (f.n * f.m), 1e-12);
  }
}

TEST(DwdTest, NonNegativityProperty) {
  std::mt19937_64 rng(8);
  int dominated_batches = 0;
  for (int s = 0; s < 20 * testing::kPropertySeeds; ++s) {
    Fixture f = RandomFixture(&rng);
    DwdBatch b(f.n, f.m, f.audio);
    MatrixXd sim = DwdSimilarities(b, ComputeDwdCentroids(b));
    bool dominated = true;
    double floor = 0.0;
    for (int r = 0; r < sim.rows(); ++r) {
      int j = r / f.m;
      dominated = dominated && sim(r, j) >= sim.row(r).maxCoeff();
      double other = -2.0;
      for (int k = 0; k < f.n; ++k)
        if (k != j) other = std::max(other, sim(r, k));
      floor += std::min(0.0, other - (sim(r, j) - 1.0));
    }
    DwdLossValue v = DwdLoss(b);
    EXPECT_GE(v.softmax, 0.0);
    EXPECT_GE(v.centroid, floor - 1e-12);
    dominated_batches += dominated;
  }
  EXPECT_GT(dominated_batches, 0);
}

TEST(DwdTest, CentroidTermCanBeNegativeWhenOwnClassDominates) {
  MatrixXd e(4, 2);
  e << 1, 0, 0.6, 0.8, -1, 0, -1, 0;
  DwdBatch b(2, 2, e);
  MatrixXd sim = DwdSimilarities(b, ComputeDwdCentroids(b));
  for (int r = 0; r < 4; ++r) EXPECT_GT(sim(r, r / 2), sim(r, 1 - r / 2));
  double cross = -0.8 / std::sqrt(0.8 * 0.8 + 0.4 * 0.4);
  double expected = (0.4 - 1.0) + (0.4 - 0.6) + 2 * cross;
  EXPECT_NEAR(DwdLoss(b).centroid, expected, 1e-12);
  EXPECT_LT(DwdLoss(b).centroid, 0.0);
}

// ----- Total ----------------------------------------------------------------

TEST(TotalLossTest, WeightExamplesAndOracle) {
  std::mt19937_64 rng(9);
  Fixture f = RandomFixture(&rng);
  DwdBatch b(f.n, f.m, f.audio);
  double clap = ClapLossMulti(f.text, b, f.tau);
  double aa = DwdLoss(b).total;
  EXPECT_NEAR(TotalLoss(f.text, b, f.tau, {0.0, 1.0}).total, aa, 1e-12);
  EXPECT_NEAR(TotalLoss(f.text, b, f.tau, {1.0, 0.0}).total, clap, 1e-12);
  double sm, cc;
  OracleDwd(f.audio, f.n, f.m, &sm, &cc);
  double oracle = 0.1 * OracleClapMulti(f.text, f.audio, f.n, f.m, f.tau) +
                  1.0 * (sm + cc);
  EXPECT_NEAR(TotalLoss(f.text, b, f.tau, {0.1, 1.0}).total, oracle, 1e-12);
  EXPECT_THROW(TotalLoss(f.text, b, f.tau, {0.0, 0.0}), ConfigError);
  EXPECT_THROW(TotalLoss(f.text, b, f.tau, {-1.0, 1.0}), ConfigError);
}

TEST(TotalLossTest, ClassPermutationInvarianceProperty) {
  std::mt19937_64 rng(10);
  for (int s = 0; s < testing::kPropertySeeds; ++s) {
    Fixture f = RandomFixture(&rng);
    std::vector<int> perm(f.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MatrixXd pt(f.n, f.text.cols()), pa(f.n * f.m, f.text.cols());
    for (int j = 0; j < f.n; ++j) {
      pt.row(j) = f.text.row(perm[j]);
      pa.middleRows(j * f.m, f.m) = f.audio.middleRows(perm[j] * f.m, f.m);
    }
    TotalLossValue a = TotalLoss(f.text, DwdBatch(f.n, f.m, f.audio), f.tau, {});
    TotalLossValue b = TotalLoss(pt, DwdBatch(f.n, f.m, pa), f.tau, {});
    EXPECT_NEAR(a.clap, b.clap, 1e-12);
    EXPECT_NEAR(a.dwd.softmax, b.dwd.softmax, 1e-12);
    EXPECT_NEAR(a.dwd.centroid, b.dwd.centroid, 1e-12);
    EXPECT_NEAR(a.total, b.total, 1e-12);
  }
}

TEST(TotalLossTest, GradientsMatchFiniteDifferences) {
  const double h = 1e-5;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 3, m = 2, d = 5;
    MatrixXd et = testing::RandomUnitRows(&rng, n, d);
    MatrixXd ea = testing::RandomUnitRows(&rng, n * m, d);
    double tau = 0.7;
    DwdOptions opts;
    opts.temperature_scaled = seed % 2 == 0;
    auto eval = [&](const MatrixXd &t, const MatrixXd &a, double tt) {
      return TotalLoss(t, DwdBatch(n, m, a), tt, {0.1, 1.0}, opts).total;
    };
    LossGradients g = LossGradients::Zeros(n, n * m, d);
    TotalLoss(et, DwdBatch(n, m, ea), tau, {0.1, 1.0}, opts, &g);
    auto rel = [](double a, double b) {
      return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
    };
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < d; ++c) {
        MatrixXd up = et, down = et;
        up(r, c) += h;
        down(r, c) -= h;
        double num = (eval(up, ea, tau) - eval(down, ea, tau)) / (2 * h);
        EXPECT_LT(rel(g.text(r, c), num), 1e-6);
      }
    for (int r = 0; r < n * m; ++r)
      for (int c = 0; c < d; ++c) {
        MatrixXd up = ea, down = ea;
        up(r, c) += h;
        down(r, c) -= h;
        double num = (eval(et, up, tau) - eval(et, down, tau)) / (2 * h);
        EXPECT_LT(rel(g.audio(r, c), num), 1e-6);
      }
    double num = (eval(et, ea, tau + h) - eval(et, ea, tau - h)) / (2 * h);
    EXPECT_LT(rel(g.tau, num), 1e-6);
  }
}

// ----- Baselines ------------------------------------------------------------

TEST(BaselineLossTest, SiameseExamples) {
  VectorXd a(2), p(2), n(2);
  a << 1, 0;
  p << 0, 1;
  n << -1, 0;
  EXPECT_NEAR(SiameseHinge(a, p, n, 0.5), 0.0, 1e-12);
  EXPECT_NEAR(SiameseHinge(a, a, a, 0.5), 0.5, 1e-12);
  VectorXd at_margin(2);
  at_margin << 0.5, std::sqrt(0.75);  // cosine distance to a is exactly 0.5
  EXPECT_NEAR(SiameseHinge(a, a, at_margin, 0.5), 0.0, 1e-12);
  EXPECT_THROW(SiameseHinge(a, VectorXd::Zero(2), n, 0.5), Error);
}

TEST(BaselineLossTest, MultiviewExamplesAndOracle) {
  VectorXd a(2), o(2);
  a << 1, 0;
  o << 0, 1;
  EXPECT_NEAR(MultiviewHinge(a, a, o, 0.5), 0.0, 1e-12);
  EXPECT_NEAR(MultiviewHinge(a, a, a, 0.5), 0.5, 1e-12);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 100; ++s) {
    MatrixXd v = testing::RandomGaussian(&rng, 3, 4);
    double m = testing::RandomReal(&rng, 0.0, 2.0);
    double oracle = std::max(0.0, m + (1 - OracleCos(v.row(0), v.row(1))) -
                                      (1 - OracleCos(v.row(0), v.row(2))));
    EXPECT_NEAR(MultiviewHinge(v.row(0), v.row(1), v.row(2), m), oracle, 1e-12);
  }
}

TEST(BaselineLossTest, NtXentExamplesAndOracle) {
  VectorXd a(2);
  a << 1, 0;
  MatrixXd neg(1, 2);
  neg << 0, 1;
  EXPECT_NEAR(NtXent(a, a, neg, 1.0), 0.313262, 1e-6);
  EXPECT_NEAR(NtXent(a, a, neg, 1.0), std::log(1.0 + std::exp(-1.0)), 1e-9);
  MatrixXd same = a.transpose().replicate(3, 1);
  EXPECT_NEAR(NtXent(a, a, same, 0.3), std::log(4.0), 1e-9);
  EXPECT_NEAR(NtXent(a, a, MatrixXd(0, 2), 0.3), 0.0, 1e-12);
  EXPECT_THROW(NtXent(a, a, neg, 0.0), Error);

  std::mt19937_64 rng(12);
  for (int s = 0; s < 100; ++s) {
    int k = testing::RandomInt(&rng, 1, 5);
    MatrixXd v = testing::RandomGaussian(&rng, k + 2, 3);
    double tau = testing::RandomReal(&rng, 0.05, 2.0);
    double num = std::exp(OracleCos(v.row(0), v.row(1)) / tau), den = num;
    for (int j = 0; j < k; ++j) den += std::exp(OracleCos(v.row(0), v.row(2 + j)) / tau);
    EXPECT_NEAR(NtXent(v.row(0), v.row(1), v.bottomRows(k), tau),
                -std::log(num / den), 1e-12);
  }
}

TEST(BaselineLossTest, CaeExamplesAndOracle) {
  RowMatrixXd t = RowMatrixXd::Random(2, 3);
  EXPECT_EQ(CaeReconstruction(t, t), 0.0);
  RowMatrixXd off = t.array() + 1.0;
  EXPECT_NEAR(CaeReconstruction(t, off), 6.0, 1e-12);
  EXPECT_THROW(CaeReconstruction(t, RowMatrixXd::Zero(3, 2)), Error);
  std::mt19937_64 rng(13);
  for (int s = 0; s < 100; ++s) {
    int rows = testing::RandomInt(&rng, 1, 6), cols = testing::RandomInt(&rng, 1, 4);
    RowMatrixXd a = testing::RandomGaussian(&rng, rows, cols);
    RowMatrixXd b = testing::RandomGaussian(&rng, rows, cols);
    double oracle = 0.0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) oracle += (a(r, c) - b(r, c)) * (a(r, c) - b(r, c));
    EXPECT_NEAR(CaeReconstruction(a, b), oracle, 1e-12);
  }
}

TEST(BaselineLossTest, ConfigValidation) {
  BaselineConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.margin = -0.1;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = BaselineConfig();
  cfg.ntxent_tau = 0.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

}  // namespace
}  // namespace awe
