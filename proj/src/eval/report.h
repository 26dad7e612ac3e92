// eval/report.h

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

#ifndef AWE_EVAL_REPORT_H_
#define AWE_EVAL_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eval/trials.h"
#include "eval/windowed-search.h"

namespace awe {

struct WdCondition {
  VocabClass vocab = VocabClass::kIV;
  bool cross = false;  // segment vs written word instead of segment pairs
  double ap = 0.0;
  uint64_t positives = 0;
  uint64_t negatives = 0;
  ScoreHistogram histogram;
  TrialSet trials;
};

/// Word discrimination on the test manifest: acoustic AP per vocabulary class
/// and, when the table holds "text:<word>" entries, cross-view AP. Classes
/// without positives are skipped.
std::vector<WdCondition> EvalWordDiscrimination(
    const EmbeddingTable &table, const std::vector<ManifestRecord> &train,
    const std::vector<ManifestRecord> &test,
    const std::vector<VocabClass> &vocabs, int num_threads);

/// Evaluation report, rendered as JSON with keys ap, ap_cross, eer, counts
/// and score_stats.
class EvalReport {
 public:
  EvalReport();
  void AddWordDiscrimination(const std::vector<WdCondition> &conds);
  /// `task` is "std" or "kws".
  void AddSearch(const std::string &task,
                 const std::vector<SearchCondition> &conds);
  const nlohmann::ordered_json &Json() const { return json_; }
  std::string Dump() const { return json_.dump(2) + "\n"; }

 private:
  nlohmann::ordered_json json_;
};

}  // namespace awe

#endif  // AWE_EVAL_REPORT_H_
