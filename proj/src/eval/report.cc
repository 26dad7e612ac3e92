// eval/report.cc

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

#include "eval/report.h"

namespace awe {

namespace {

using nlohmann::ordered_json;

ordered_json StatsJson(const ScoreStats &s) {
  return ordered_json{{"count", s.count}, {"mean", s.mean}, {"std", s.stddev}};
}

ordered_json CountsJson(uint64_t pos, uint64_t neg) {
  return ordered_json{{"positive", pos}, {"negative", neg}};
}

ordered_json HistStatsJson(const ScoreHistogram &h) {
  return ordered_json{{"positive", StatsJson(h.positive_stats)},
                      {"negative", StatsJson(h.negative_stats)}};
}

bool HasTextEntries(const EmbeddingTable &table) {
  for (const auto &id : table.Ids())
    if (id.rfind(kTextIdPrefix, 0) == 0) return true;
  return false;
}

}  // namespace

std::vector<WdCondition> EvalWordDiscrimination(
    const EmbeddingTable &table, const std::vector<ManifestRecord> &train,
    const std::vector<ManifestRecord> &test,
    const std::vector<VocabClass> &vocabs, int num_threads) {
  auto split = IvOovSplit(train, test);
  const bool cross = HasTextEntries(table);
  std::vector<WdCondition> out;
  for (int view = 0; view < (cross ? 2 : 1); ++view) {
    for (VocabClass v : vocabs) {
      WdCondition c;
      c.vocab = v;
      c.cross = view == 1;
      c.trials = c.cross ? BuildCrossTrials(test, split, v)
                         : BuildWdTrials(test, split, v);
      c.positives = c.trials.NumPositive();
      c.negatives = c.trials.trials.size() - c.positives;
      if (c.positives == 0) continue;
      ScoreTrials(&c.trials, table, num_threads);
      auto labeled = c.trials.Labeled();
      c.ap = AveragePrecision(labeled);
      c.histogram = ComputeHistogram(labeled);
      out.push_back(std::move(c));
    }
  }
  return out;
}

EvalReport::EvalReport() {
  json_["ap"] = ordered_json::object();
  json_["ap_cross"] = ordered_json::object();
  json_["eer"] = ordered_json::object();
  json_["counts"] = ordered_json::object();
  json_["score_stats"] = ordered_json::object();
}

void EvalReport::AddWordDiscrimination(const std::vector<WdCondition> &conds) {
  for (const auto &c : conds) {
    const char *view = c.cross ? "wd_cross" : "wd";
    const char *vocab = VocabClassName(c.vocab);
    json_[c.cross ? "ap_cross" : "ap"][vocab] = c.ap;
    json_[std::string(c.cross ? "ap_cross_" : "ap_") + vocab] = c.ap;
    json_["counts"][view][vocab] = CountsJson(c.positives, c.negatives);
    json_["score_stats"][view][vocab] = HistStatsJson(c.histogram);
  }
}

void EvalReport::AddSearch(const std::string &task,
                           const std::vector<SearchCondition> &conds) {
  for (const auto &c : conds) {
    const char *vocab = VocabClassName(c.vocab);
    json_["eer"][task][vocab][c.window] = c.eer;
    json_["counts"][task][vocab][c.window] = CountsJson(c.positives, c.negatives);
    json_["score_stats"][task][vocab][c.window] = HistStatsJson(c.histogram);
  }
}

}  // namespace awe
