// training/batch-sampler.cc

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

#include "training/batch-sampler.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace awe {

TrainingPool BuildTrainingPool(const std::vector<ManifestRecord> &records,
                               const Lexicon &lexicon) {
  std::map<std::string, std::vector<int>> by_word;
  for (size_t r = 0; r < records.size(); ++r)
    if (records[r].split == Split::kTrain)
      by_word[records[r].word].push_back(static_cast<int>(r));
  TrainingPool pool;
  for (auto &[word, idx] : by_word) {
    auto it = lexicon.find(word);
    if (it == lexicon.end()) AWE_ERR("word \"", word, "\" has no lexicon entry");
    pool.words.push_back(word);
    pool.phonemes.push_back(it->second);
    pool.instances.push_back(std::move(idx));
  }
  return pool;
}

SampledBatch SampleBatch(const TrainingPool &pool, int n, int m,
                         std::mt19937_64 &rng) {
  AWE_CHECK(n >= 1 && m >= 1, "batch needs N >= 1 and M >= 1");
  if (static_cast<int>(pool.words.size()) < n)
    AWE_ERR("batch needs ", n, " distinct training words, corpus has ",
            pool.words.size());
  std::vector<int> order(pool.words.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  SampledBatch b;
  b.classes.assign(order.begin(), order.begin() + n);
  for (int c : b.classes) {
    std::vector<int> inst = pool.instances[c];
    std::vector<int> picked;
    if (static_cast<int>(inst.size()) >= m) {
      std::shuffle(inst.begin(), inst.end(), rng);
      picked.assign(inst.begin(), inst.begin() + m);
    } else {
      b.with_replacement = true;
      std::uniform_int_distribution<size_t> pick(0, inst.size() - 1);
      for (int i = 0; i < m; ++i) picked.push_back(inst[pick(rng)]);
    }
    b.instances.push_back(std::move(picked));
    b.texts.push_back(pool.phonemes[c]);
  }
  return b;
}

}  // namespace awe
