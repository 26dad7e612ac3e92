// synth/synth-corpus.cc

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

#include "synth/synth-corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <random>
#include <set>

#include "base/awe-common.h"

namespace awe {

namespace {

std::string Format(const char *fmt, int a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

std::string Format(const char *fmt, int a, int b) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

std::string FeaturePathFor(const std::string &id) {
  return "features/" + id + ".feat";
}

FeatureSequence ToFeatures(const RowMatrixXd &m) {
  FeatureSequence f;
  f.frames = m.cast<float>();
  return f;
}

struct TestItem {
  int class_id;
  std::string id;
};

}  // namespace

void SynthConfig::Validate() const {
  if (n_classes < 2) throw ConfigError("synth.n_classes must be >= 2");
  if (n_oov_classes < 0 || n_oov_classes >= n_classes)
    throw ConfigError("synth.n_oov_classes must be in [0, n_classes)");
  if (instances_per_class < 2)
    throw ConfigError("synth.instances_per_class must be >= 2");
  if (n_speakers < 1) throw ConfigError("synth.n_speakers must be >= 1");
  if (feat_dim < 1) throw ConfigError("synth.feat_dim must be >= 1");
  if (proto_len_min < 2 || proto_len_max < proto_len_min)
    throw ConfigError("synth.proto_len range must satisfy 2 <= min <= max");
  if (!(warp_min > 0) || warp_max < warp_min)
    throw ConfigError("synth.warp range must be positive and ordered");
  if (noise_sigma < 0 || speaker_sigma < 0)
    throw ConfigError("synth sigmas must be >= 0");
  if (phoneme_vocab < 2) throw ConfigError("synth.phoneme_vocab must be >= 2");
  if (!(train_fraction > 0 && train_fraction < 1))
    throw ConfigError("synth.train_fraction must be in (0, 1)");
  if (words_per_utterance < 1)
    throw ConfigError("synth.words_per_utterance must be >= 1");
  if (gap_min < 0 || gap_max < gap_min)
    throw ConfigError("synth.gap range must satisfy 0 <= min <= max");
}

PhonemeSequence ClassPhonemes(int class_id, int n_classes, int vocab) {
  AWE_CHECK(vocab >= 2, "phoneme vocabulary must have at least 2 symbols");
  int digits = 1;
  for (long long cap = vocab; cap < n_classes; cap *= vocab) ++digits;
  digits = std::max(3, digits);
  PhonemeSequence p(digits);
  int v = class_id;
  for (int i = digits - 1; i >= 0; --i) {
    p[i] = v % vocab;
    v /= vocab;
  }
  return p;
}

RowMatrixXd SmoothedRandomWalk(const RowMatrixXd &steps) {
  const int len = static_cast<int>(steps.rows());
  RowMatrixXd walk = steps;
  for (int t = 1; t < len; ++t) walk.row(t) += walk.row(t - 1);
  RowMatrixXd out(len, steps.cols());
  for (int t = 0; t < len; ++t) {
    int lo = std::max(0, t - 2), hi = std::min(len - 1, t + 2);
    out.row(t) = walk.middleRows(lo, hi - lo + 1).colwise().mean();
  }
  return out;
}

RowMatrixXd TimeWarp(const RowMatrixXd &seq, int new_len) {
  const int len = static_cast<int>(seq.rows());
  AWE_CHECK(len >= 1 && new_len >= 1, "time warp needs non-empty sequences");
  if (new_len == len) return seq;
  RowMatrixXd out(new_len, seq.cols());
  for (int t = 0; t < new_len; ++t) {
    double src = new_len == 1 ? 0.0
                              : static_cast<double>(t) * (len - 1) / (new_len - 1);
    int i0 = static_cast<int>(std::floor(src));
    int i1 = std::min(i0 + 1, len - 1);
    double frac = src - i0;
    out.row(t) = (1.0 - frac) * seq.row(i0) + frac * seq.row(i1);
  }
  return out;
}

SynthCorpus GenerateCorpus(const SynthConfig &cfg) {
  cfg.Validate();
  SynthCorpus corpus;
  const int F = cfg.feat_dim;
  const int first_oov = cfg.n_classes - cfg.n_oov_classes;
  const int n_train = static_cast<int>(
      std::lround(cfg.train_fraction * cfg.instances_per_class));

  // Stream order: speaker offsets, then per class its prototype followed by
  // its instances (warp, speaker, noise).
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> unit_normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit_uniform(0.0, 1.0);

  RowMatrixXd speaker_offsets(cfg.n_speakers, F);
  for (int s = 0; s < cfg.n_speakers; ++s)
    for (int f = 0; f < F; ++f)
      speaker_offsets(s, f) = cfg.speaker_sigma * unit_normal(rng);

  std::vector<TestItem> test_items;
  for (int c = 0; c < cfg.n_classes; ++c) {
    WordClassSpec spec;
    spec.class_id = c;
    spec.word = Format("w%03d", c);
    spec.phonemes = ClassPhonemes(c, cfg.n_classes, cfg.phoneme_vocab);
    int len = std::uniform_int_distribution<int>(cfg.proto_len_min,
                                                 cfg.proto_len_max)(rng);
    RowMatrixXd steps(len, F);
    for (int t = 0; t < len; ++t)
      for (int f = 0; f < F; ++f) steps(t, f) = unit_normal(rng);
    spec.prototype = SmoothedRandomWalk(steps);
    corpus.lexicon[spec.word] = spec.phonemes;

    bool oov = c >= first_oov;
    for (int i = 0; i < cfg.instances_per_class; ++i) {
      double warp = cfg.warp_min + unit_uniform(rng) * (cfg.warp_max - cfg.warp_min);
      int new_len = std::max(2, static_cast<int>(std::lround(len * warp)));
      int speaker = std::uniform_int_distribution<int>(0, cfg.n_speakers - 1)(rng);
      RowMatrixXd inst = TimeWarp(spec.prototype, new_len);
      for (int t = 0; t < new_len; ++t)
        for (int f = 0; f < F; ++f)
          inst(t, f) += speaker_offsets(speaker, f) +
                        cfg.noise_sigma * unit_normal(rng);

      ManifestRecord r;
      r.id = Format("w%03d_%03d", c, i);
      r.word = spec.word;
      r.split = (!oov && i < n_train) ? Split::kTrain : Split::kTest;
      r.feature_path = FeaturePathFor(r.id);
      r.start_s = 0.0;
      r.end_s = new_len * kFrameShiftSeconds;
      r.speaker = Format("spk%02d", speaker);
      corpus.features.emplace(r.id, ToFeatures(inst));
      if (r.split == Split::kTrain) {
        corpus.train.push_back(r);
      } else {
        test_items.push_back({c, r.id});
        corpus.test.push_back(std::move(r));
      }
    }
    corpus.classes.push_back(std::move(spec));
  }

  // Search utterances draw from their own stream.
  std::seed_seq search_seed{static_cast<uint32_t>(cfg.seed),
                            static_cast<uint32_t>(cfg.seed >> 32), 0x5eu};
  std::mt19937_64 srng(search_seed);

  std::set<int> have_query;
  std::vector<TestItem> pool;
  for (size_t k = 0; k < corpus.test.size(); ++k) {
    const TestItem &item = test_items[k];
    if (have_query.insert(item.class_id).second)
      corpus.queries.push_back(corpus.test[k]);
    else
      pool.push_back(item);
  }
  std::shuffle(pool.begin(), pool.end(), srng);

  std::deque<TestItem> pending(pool.begin(), pool.end());
  std::uniform_int_distribution<int> gap_dist(cfg.gap_min, cfg.gap_max);
  int utt_index = 0;
  while (!pending.empty()) {
    std::vector<TestItem> words, skipped;
    std::set<int> used;
    while (!pending.empty() &&
           static_cast<int>(words.size()) < cfg.words_per_utterance) {
      TestItem item = pending.front();
      pending.pop_front();
      if (used.insert(item.class_id).second)
        words.push_back(item);
      else
        skipped.push_back(item);
    }
    pending.insert(pending.begin(), skipped.begin(), skipped.end());

    std::vector<int> gaps;
    int total = 0;
    for (size_t w = 0; w <= words.size(); ++w) {
      gaps.push_back(gap_dist(srng));
      total += gaps.back();
      if (w < words.size()) total += corpus.features.at(words[w].id).NumFrames();
    }
    RowMatrixXd frames(total, F);
    SearchUtterance utt;
    utt.id = Format("utt%04d", utt_index++);
    utt.feature_path = FeaturePathFor(utt.id);
    int pos = 0;
    for (size_t w = 0; w <= words.size(); ++w) {
      for (int t = 0; t < gaps[w]; ++t, ++pos)
        for (int f = 0; f < F; ++f)
          frames(pos, f) = cfg.noise_sigma * unit_normal(srng);
      if (w == words.size()) break;
      const FeatureSequence &seg = corpus.features.at(words[w].id);
      frames.middleRows(pos, seg.NumFrames()) = seg.frames.cast<double>();
      utt.words.push_back({corpus.classes[words[w].class_id].word,
                           pos * kFrameShiftSeconds,
                           (pos + seg.NumFrames()) * kFrameShiftSeconds});
      if (w == 0) {
        for (const auto &r : corpus.test)
          if (r.id == words[w].id) utt.speaker = r.speaker;
      }
      pos += seg.NumFrames();
    }
    corpus.features.emplace(utt.id, ToFeatures(frames));
    corpus.search.push_back(std::move(utt));
  }
  return corpus;
}

void WriteCorpus(const SynthCorpus &corpus,
                 const std::filesystem::path &out_dir) {
  std::filesystem::create_directories(out_dir / "features");
  for (const auto &[id, seq] : corpus.features)
    WriteFeatures(seq, out_dir / FeaturePathFor(id));
  WriteManifest(corpus.train, out_dir / "train.jsonl");
  WriteManifest(corpus.test, out_dir / "test.jsonl");
  WriteManifest(corpus.queries, out_dir / "queries.jsonl");
  WriteSearchManifest(corpus.search, out_dir / "search.jsonl");
  WriteLexicon(corpus.lexicon, out_dir / "lexicon.txt");
}

double ClassSeparability(const std::vector<FeatureSequence> &seqs,
                         const std::vector<std::string> &labels) {
  AWE_CHECK(seqs.size() == labels.size(), "sequence/label count mismatch");
  std::vector<Eigen::VectorXd> means;
  means.reserve(seqs.size());
  for (const auto &s : seqs)
    means.push_back(s.frames.cast<double>().colwise().mean().transpose());
  double within = 0, between = 0;
  long long n_within = 0, n_between = 0;
  for (size_t a = 0; a < seqs.size(); ++a) {
    for (size_t b = a + 1; b < seqs.size(); ++b) {
      double d = (means[a] - means[b]).norm();
      if (labels[a] == labels[b]) {
        within += d;
        ++n_within;
      } else {
        between += d;
        ++n_between;
      }
    }
  }
  AWE_CHECK(n_within > 0 && n_between > 0,
            "separability needs both same-class and different-class pairs");
  within /= n_within;
  between /= n_between;
  if (between == 0.0) return within == 0.0 ? 1.0 : INFINITY;
  return within / between;
}

double ClassSeparability(const SynthCorpus &corpus) {
  std::vector<FeatureSequence> seqs;
  std::vector<std::string> labels;
  for (const auto *split : {&corpus.train, &corpus.test}) {
    for (const auto &r : *split) {
      seqs.push_back(corpus.features.at(r.id));
      labels.push_back(r.word);
    }
  }
  return ClassSeparability(seqs, labels);
}

}  // namespace awe
