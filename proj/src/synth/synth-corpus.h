// synth/synth-corpus.h

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

#ifndef AWE_SYNTH_SYNTH_CORPUS_H_
#define AWE_SYNTH_SYNTH_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "frontend/manifest.h"

namespace awe {

// A desk-scale stand-in for a forced-aligned speech corpus. Every word class
// has a smooth random-walk "prototype" trajectory of feature frames; instances
// are time-warped, speaker-shifted, noisy copies of it. The last
// n_oov_classes classes only ever appear in the test split.
struct SynthConfig {
  int n_classes = 50;
  int n_oov_classes = 10;
  int instances_per_class = 20;
  int n_speakers = 10;
  int feat_dim = 20;
  int proto_len_min = 64;  // frames
  int proto_len_max = 120;
  double warp_min = 0.8;
  double warp_max = 1.25;
  double noise_sigma = 20.0;
  double speaker_sigma = 6.0;
  int phoneme_vocab = 8;
  uint64_t seed = 1;
  double train_fraction = 0.8;  // of each in-vocabulary class

  // Search utterances for spoken term detection / keyword spotting are
  // assembled from held-out test instances.
  int words_per_utterance = 3;
  int gap_min = 5;  // filler frames around words
  int gap_max = 20;

  void Validate() const;
};

struct WordClassSpec {
  int class_id = 0;
  std::string word;
  RowMatrixXd prototype;  // L x F
  PhonemeSequence phonemes;
};

struct SynthCorpus {
  std::vector<WordClassSpec> classes;
  std::vector<ManifestRecord> train;
  std::vector<ManifestRecord> test;
  /// One spoken query per test word, drawn from `test` and never used inside
  /// a search utterance.
  std::vector<ManifestRecord> queries;
  std::vector<SearchUtterance> search;
  Lexicon lexicon;
  /// Features keyed by record / utterance id.
  std::map<std::string, FeatureSequence> features;
};

/// Base-K digits of class_id, most significant first, padded to
/// max(3, ceil(log_K(n_classes))).
PhonemeSequence ClassPhonemes(int class_id, int n_classes, int vocab);

/// Cumulative sum of the rows of `steps`, then a centered 5-frame moving
/// average (truncated at the edges).
RowMatrixXd SmoothedRandomWalk(const RowMatrixXd &steps);

/// Linear-interpolation resampling of `seq` to `new_len` frames. Endpoints
/// map to endpoints; new_len == rows is the identity.
RowMatrixXd TimeWarp(const RowMatrixXd &seq, int new_len);

/// Deterministic in `cfg` (including its seed).
SynthCorpus GenerateCorpus(const SynthConfig &cfg);

/// Writes train.jsonl, test.jsonl, queries.jsonl, search.jsonl, lexicon.txt
/// and features/*.feat under `out_dir`.
void WriteCorpus(const SynthCorpus &corpus, const std::filesystem::path &out_dir);

/// Mean within-class distance between frame-averaged feature vectors divided
/// by the mean between-class distance. Small values mean a learnable corpus.
double ClassSeparability(const std::vector<FeatureSequence> &seqs,
                         const std::vector<std::string> &labels);
double ClassSeparability(const SynthCorpus &corpus);

}  // namespace awe

#endif  // AWE_SYNTH_SYNTH_CORPUS_H_
