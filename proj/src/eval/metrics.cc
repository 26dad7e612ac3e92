// eval/metrics.cc

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

#include "eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "base/awe-common.h"

namespace awe {

double AveragePrecision(std::vector<LabeledScore> trials) {
  std::sort(trials.begin(), trials.end(),
            [](const LabeledScore &a, const LabeledScore &b) {
              return a.score > b.score;
            });
  uint64_t total_pos = 0;
  for (const auto &t : trials) total_pos += t.positive;
  if (total_pos == 0) AWE_ERR("average precision needs at least one positive");
  double ap = 0.0;
  uint64_t seen = 0, seen_pos = 0;
  for (size_t i = 0; i < trials.size();) {
    size_t j = i;
    uint64_t group_pos = 0;
    while (j < trials.size() && trials[j].score == trials[i].score)
      group_pos += trials[j++].positive;
    seen += j - i;
    seen_pos += group_pos;
    if (group_pos > 0)
      ap += static_cast<double>(seen_pos) / static_cast<double>(seen) *
            static_cast<double>(group_pos);
    i = j;
  }
  return ap / static_cast<double>(total_pos);
}

double EqualErrorRate(std::vector<LabeledScore> trials) {
  std::sort(trials.begin(), trials.end(),
            [](const LabeledScore &a, const LabeledScore &b) {
              return a.score < b.score;
            });
  uint64_t n_pos = 0;
  for (const auto &t : trials) n_pos += t.positive;
  const uint64_t n_neg = trials.size() - n_pos;
  if (n_pos == 0 || n_neg == 0)
    AWE_ERR("equal error rate needs both positive and negative trials");

  // Walk thresholds upward; before each group, everything from the group on
  // is accepted.
  uint64_t pos_below = 0, neg_below = 0;
  double prev_far = 0.0, prev_diff = 0.0;
  bool have_prev = false;
  auto visit = [&](double far, double frr, double *eer) {
    double diff = far - frr;
    if (diff <= 0.0) {
      if (diff == 0.0 || !have_prev) {
        *eer = far;
      } else {
        double t = prev_diff / (prev_diff - diff);
        *eer = prev_far + t * (far - prev_far);
      }
      return true;
    }
    prev_far = far;
    prev_diff = diff;
    have_prev = true;
    return false;
  };
  double eer = 0.0;
  for (size_t i = 0; i < trials.size();) {
    double far = static_cast<double>(n_neg - neg_below) / n_neg;
    double frr = static_cast<double>(pos_below) / n_pos;
    if (visit(far, frr, &eer)) return eer;
    size_t j = i;
    while (j < trials.size() && trials[j].score == trials[i].score) {
      if (trials[j].positive)
        ++pos_below;
      else
        ++neg_below;
      ++j;
    }
    i = j;
  }
  // Threshold +inf: nothing accepted.
  visit(0.0, 1.0, &eer);
  return eer;
}

int ScoreHistogram::BinOf(double score) {
  int b = static_cast<int>(std::floor((score + 1.0) / 2.0 * kBins));
  return std::clamp(b, 0, kBins - 1);
}

std::string ScoreHistogram::ToCsv() const {
  std::string out = "bin_low,bin_high,positive,negative\n";
  char line[96];
  for (int b = 0; b < kBins; ++b) {
    double lo = -1.0 + 2.0 * b / kBins, hi = -1.0 + 2.0 * (b + 1) / kBins;
    std::snprintf(line, sizeof(line), "%.2f,%.2f,%llu,%llu\n", lo, hi,
                  static_cast<unsigned long long>(positive[b]),
                  static_cast<unsigned long long>(negative[b]));
    out += line;
  }
  return out;
}

ScoreHistogram ComputeHistogram(const std::vector<LabeledScore> &trials) {
  ScoreHistogram h;
  double sum[2] = {0, 0}, sum_sq[2] = {0, 0};
  uint64_t n[2] = {0, 0};
  for (const auto &t : trials) {
    int l = t.positive ? 1 : 0;
    (t.positive ? h.positive : h.negative)[ScoreHistogram::BinOf(t.score)]++;
    sum[l] += t.score;
    sum_sq[l] += t.score * t.score;
    ++n[l];
  }
  ScoreStats *stats[2] = {&h.negative_stats, &h.positive_stats};
  for (int l = 0; l < 2; ++l) {
    stats[l]->count = n[l];
    if (n[l] == 0) continue;
    stats[l]->mean = sum[l] / n[l];
    stats[l]->stddev =
        std::sqrt(std::max(0.0, sum_sq[l] / n[l] - stats[l]->mean * stats[l]->mean));
  }
  return h;
}

}  // namespace awe
