// eval/metrics.h

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

#ifndef AWE_EVAL_METRICS_H_
#define AWE_EVAL_METRICS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace awe {

/// A score with its ground-truth label.
struct LabeledScore {
  double score = 0.0;
  bool positive = false;
};

/// Exact average precision. Trials are ranked by descending score and every
/// group of equal scores is one threshold:
///   AP = sum over groups g of precision(g) * positives(g) / P,
/// where precision(g) counts every trial scored >= the group's score.
/// Throws if there are no positives.
double AveragePrecision(std::vector<LabeledScore> trials);

/// Equal error rate. Thresholds are the sorted distinct scores plus +inf; at
/// threshold t, FAR = #negatives >= t / #negatives and
/// FRR = #positives < t / #positives. The result is interpolated linearly
/// between the last threshold with FAR > FRR and the first with FAR <= FRR.
/// Throws unless both labels are present.
double EqualErrorRate(std::vector<LabeledScore> trials);

struct ScoreStats {
  uint64_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

/// 50 uniform bins over [-1, 1] per label; scores outside are clamped into
/// the end bins.
struct ScoreHistogram {
  static constexpr int kBins = 50;
  std::array<uint64_t, kBins> positive{};
  std::array<uint64_t, kBins> negative{};
  ScoreStats positive_stats;
  ScoreStats negative_stats;

  static int BinOf(double score);
  /// CSV with header bin_low,bin_high,positive,negative.
  std::string ToCsv() const;
};

ScoreHistogram ComputeHistogram(const std::vector<LabeledScore> &trials);

}  // namespace awe

#endif  // AWE_EVAL_METRICS_H_
