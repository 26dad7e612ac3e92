// eval/trials.cc

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

#include "eval/trials.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>

#include "base/parallel.h"

namespace awe {

const char *VocabClassName(VocabClass v) {
  return v == VocabClass::kIV ? "iv" : "oov";
}

VocabClass ParseVocabClass(const std::string &s) {
  if (s == "iv") return VocabClass::kIV;
  if (s == "oov") return VocabClass::kOOV;
  throw ConfigError("vocabulary class must be \"iv\" or \"oov\", got \"" + s +
                    "\"");
}

std::string FoldCase(const std::string &word) {
  std::string out = word;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::map<std::string, VocabClass> IvOovSplit(
    const std::vector<ManifestRecord> &train,
    const std::vector<ManifestRecord> &test) {
  std::set<std::string> seen;
  for (const auto &r : train) seen.insert(FoldCase(r.word));
  std::map<std::string, VocabClass> split;
  for (const auto &r : test) {
    std::string w = FoldCase(r.word);
    split[w] = seen.count(w) ? VocabClass::kIV : VocabClass::kOOV;
  }
  return split;
}

uint64_t TrialSet::NumPositive() const {
  uint64_t n = 0;
  for (const auto &t : trials) n += t.positive;
  return n;
}

std::vector<LabeledScore> TrialSet::Labeled() const {
  std::vector<LabeledScore> out(trials.size());
  for (size_t i = 0; i < trials.size(); ++i)
    out[i] = {static_cast<double>(trials[i].score), trials[i].positive};
  return out;
}

std::string TrialSet::ToCsv() const {
  std::string out = "id_a,id_b,label,score\n";
  char num[32];
  for (const auto &t : trials) {
    std::snprintf(num, sizeof(num), "%.9g", static_cast<double>(t.score));
    out += ids[t.a] + "," + ids[t.b] + (t.positive ? ",positive," : ",negative,") +
           num + "\n";
  }
  return out;
}

namespace {

bool InVocab(const std::map<std::string, VocabClass> &split,
             const std::string &folded, VocabClass vocab) {
  auto it = split.find(folded);
  return it != split.end() && it->second == vocab;
}

}  // namespace

TrialSet BuildWdTrials(const std::vector<ManifestRecord> &test,
                       const std::map<std::string, VocabClass> &split,
                       VocabClass vocab) {
  TrialSet set;
  std::vector<std::string> words;
  for (const auto &r : test) {
    std::string w = FoldCase(r.word);
    if (!InVocab(split, w, vocab)) continue;
    set.ids.push_back(r.id);
    words.push_back(std::move(w));
  }
  const size_t n = set.ids.size();
  set.trials.reserve(n * (n - (n > 0)) / 2);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      set.trials.push_back({static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                            0.0f, words[a] == words[b]});
  return set;
}

TrialSet BuildCrossTrials(const std::vector<ManifestRecord> &test,
                          const std::map<std::string, VocabClass> &split,
                          VocabClass vocab) {
  TrialSet set;
  std::vector<std::string> seg_words;
  std::vector<std::string> vocab_words;
  for (const auto &[w, v] : split)
    if (v == vocab) vocab_words.push_back(w);
  for (const auto &r : test) {
    std::string w = FoldCase(r.word);
    if (!InVocab(split, w, vocab)) continue;
    set.ids.push_back(r.id);
    seg_words.push_back(std::move(w));
  }
  const uint32_t n_seg = static_cast<uint32_t>(set.ids.size());
  for (const auto &w : vocab_words) set.ids.push_back(kTextIdPrefix + w);
  for (uint32_t s = 0; s < n_seg; ++s)
    for (uint32_t k = 0; k < vocab_words.size(); ++k)
      set.trials.push_back({s, n_seg + k, 0.0f, seg_words[s] == vocab_words[k]});
  return set;
}

void ScoreTrials(TrialSet *set, const EmbeddingTable &table, int num_threads) {
  std::vector<size_t> rows(set->ids.size());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = table.IndexOf(set->ids[i]);
  ParallelFor(set->trials.size(), num_threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      Trial &t = set->trials[i];
      t.score = static_cast<float>(
          CosineSimilarity(table.Row(rows[t.a]), table.Row(rows[t.b])));
    }
  });
}

}  // namespace awe
