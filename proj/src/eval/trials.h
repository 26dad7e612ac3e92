// eval/trials.h

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

#ifndef AWE_EVAL_TRIALS_H_
#define AWE_EVAL_TRIALS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eval/embedding-table.h"
#include "eval/metrics.h"
#include "frontend/manifest.h"

namespace awe {

enum class VocabClass { kIV, kOOV };

const char *VocabClassName(VocabClass v);  // "iv" / "oov"
VocabClass ParseVocabClass(const std::string &s);

/// Lower-cased copy, used for every word comparison during evaluation.
std::string FoldCase(const std::string &word);

/// Every (case-folded) test word: IV if it also occurs in the train
/// manifest, OOV otherwise.
std::map<std::string, VocabClass> IvOovSplit(
    const std::vector<ManifestRecord> &train,
    const std::vector<ManifestRecord> &test);

/// A pair of items, by index into TrialSet::ids.
struct Trial {
  uint32_t a = 0;
  uint32_t b = 0;
  float score = 0.0f;
  bool positive = false;
};

struct TrialSet {
  std::vector<std::string> ids;
  std::vector<Trial> trials;

  uint64_t NumPositive() const;
  uint64_t NumNegative() const { return trials.size() - NumPositive(); }
  std::vector<LabeledScore> Labeled() const;
  /// CSV with header id_a,id_b,label,score.
  std::string ToCsv() const;
};

/// All unordered pairs of test segments whose word is in `vocab`, once
/// each; positive iff the two words match.
TrialSet BuildWdTrials(const std::vector<ManifestRecord> &test,
                       const std::map<std::string, VocabClass> &split,
                       VocabClass vocab);

/// Every test segment in `vocab` against the written form ("text:<word>") of
/// every word in `vocab`; positive iff the segment is that word.
TrialSet BuildCrossTrials(const std::vector<ManifestRecord> &test,
                          const std::map<std::string, VocabClass> &split,
                          VocabClass vocab);

/// Fills each trial's score with the cosine of its two embeddings. Trials are
/// split into contiguous chunks over up to `num_threads` workers; the output
/// does not depend on the worker count.
void ScoreTrials(TrialSet *set, const EmbeddingTable &table, int num_threads);

}  // namespace awe

#endif  // AWE_EVAL_TRIALS_H_
