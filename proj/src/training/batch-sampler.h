// training/batch-sampler.h

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

#ifndef AWE_TRAINING_BATCH_SAMPLER_H_
#define AWE_TRAINING_BATCH_SAMPLER_H_

#include <random>
#include <string>
#include <vector>

#include "frontend/manifest.h"

namespace awe {

/// Training-split records grouped by word, words in sorted order.
struct TrainingPool {
  std::vector<std::string> words;
  std::vector<PhonemeSequence> phonemes;      // parallel to words
  std::vector<std::vector<int>> instances;    // record indices per word
};

/// Groups the split=train records by word. Every word needs a lexicon entry.
TrainingPool BuildTrainingPool(const std::vector<ManifestRecord> &records,
                               const Lexicon &lexicon);

struct SampledBatch {
  std::vector<int> classes;                // N indices into the pool's words
  std::vector<std::vector<int>> instances;  // N x M record indices
  std::vector<PhonemeSequence> texts;      // N
  // Set when some class had fewer than M instances and was drawn with
  // replacement.
  bool with_replacement = false;
};

/// N distinct words uniformly without replacement, then M distinct instances
/// of each (with replacement only for words that have fewer than M).
SampledBatch SampleBatch(const TrainingPool &pool, int n, int m,
                         std::mt19937_64 &rng);

}  // namespace awe

#endif  // AWE_TRAINING_BATCH_SAMPLER_H_
