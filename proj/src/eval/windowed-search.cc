// eval/windowed-search.cc

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

#include "eval/windowed-search.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "eval/embedding-table.h"

namespace awe {

namespace {

int SecondsToFrames(double s) {
  return static_cast<int>(std::lround(s / kFrameShiftSeconds));
}

}  // namespace

std::vector<FrameSpan> SegmentWindows(int num_frames, double window_s,
                                      double hop_s) {
  AWE_CHECK(window_s > 0.0 && hop_s > 0.0, "window and hop must be positive");
  AWE_CHECK(num_frames >= 1, "cannot window an empty utterance");
  const int w = std::max(1, SecondsToFrames(window_s));
  const int h = std::max(1, SecondsToFrames(hop_s));
  if (num_frames <= w) return {{0, num_frames}};
  std::vector<FrameSpan> spans;
  const int n_full = (num_frames - w) / h + 1;
  for (int k = 0; k < n_full; ++k) spans.push_back({k * h, w});
  const int next = n_full * h;
  const int rest = num_frames - next;
  if (rest > 0 && next + w > num_frames && 2 * rest >= w)
    spans.push_back({next, rest});
  return spans;
}

std::vector<FrameSpan> AlignedSpans(const SearchUtterance &utt, int num_frames) {
  std::vector<FrameSpan> spans;
  for (const auto &w : utt.words) {
    int a = std::clamp(SecondsToFrames(w.start_s), 0, num_frames - 1);
    int b = std::clamp(SecondsToFrames(w.end_s), a + 1, num_frames);
    spans.push_back({a, b - a});
  }
  AWE_CHECK(!spans.empty(), "utterance ", utt.id, " has no word spans");
  return spans;
}

FeatureSequence SliceFrames(const FeatureSequence &seq, const FrameSpan &span) {
  AWE_CHECK(span.start >= 0 && span.length >= 1 &&
                span.start + span.length <= seq.NumFrames(),
            "frame span [", span.start, ", ", span.start + span.length,
            ") outside a sequence of ", seq.NumFrames(), " frames");
  FeatureSequence out;
  out.frames = seq.frames.middleRows(span.start, span.length);
  return out;
}

double StdScore(const Eigen::VectorXd &query, const Eigen::MatrixXd &windows) {
  AWE_CHECK(windows.rows() >= 1, "no windows to score");
  double best = -std::numeric_limits<double>::infinity();
  const double qn = query.norm();
  for (Eigen::Index r = 0; r < windows.rows(); ++r) {
    double denom = qn * windows.row(r).norm();
    double c = denom > 0.0 ? windows.row(r).dot(query) / denom : 0.0;
    best = std::max(best, c);
  }
  return best;
}

void SearchConfig::Validate() const {
  if (windows.empty() && !aligned)
    throw ConfigError("search needs at least one window size");
  for (double w : windows)
    if (!(w > 0.0)) throw ConfigError("window sizes must be positive");
  if (!(hop_fraction > 0.0)) throw ConfigError("hop fraction must be positive");
}

std::string WindowLabel(double window_s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", window_s);
  return buf;
}

std::vector<SearchCondition> RunSearch(
    const ParamStore &params, const EncoderConfig &enc,
    const SearchQueries &queries, const std::vector<SearchUtterance> &utts,
    const std::vector<FeatureSequence> &utt_features,
    const std::map<std::string, VocabClass> &split, const SearchConfig &cfg) {
  cfg.Validate();
  AWE_CHECK(utts.size() == utt_features.size(),
            "utterances and features differ in length");
  AWE_CHECK(!utts.empty(), "no search utterances");
  const size_t n_q = queries.words.size(), n_u = utts.size();

  std::vector<std::set<std::string>> contains(n_u);
  for (size_t u = 0; u < n_u; ++u)
    for (const auto &w : utts[u].words) contains[u].insert(FoldCase(w.word));

  std::vector<std::string> labels;
  for (double w : cfg.windows) labels.push_back(WindowLabel(w));
  if (cfg.aligned) labels.push_back(kAlignedLabel);

  std::vector<SearchCondition> out;
  for (size_t c = 0; c < labels.size(); ++c) {
    const bool aligned = labels[c] == kAlignedLabel;
    std::vector<FeatureSequence> pieces;
    std::vector<size_t> first(n_u + 1, 0);
    for (size_t u = 0; u < n_u; ++u) {
      int t = utt_features[u].NumFrames();
      auto spans = aligned ? AlignedSpans(utts[u], t)
                           : SegmentWindows(t, cfg.windows[c],
                                            cfg.windows[c] * cfg.hop_fraction);
      for (const auto &s : spans) pieces.push_back(SliceFrames(utt_features[u], s));
      first[u + 1] = pieces.size();
    }
    Eigen::MatrixXd emb = EmbedAudioParallel(params, enc, pieces, cfg.num_threads);
    Eigen::MatrixXd best(n_q, n_u);
    for (size_t u = 0; u < n_u; ++u) {
      Eigen::MatrixXd win = emb.middleRows(first[u], first[u + 1] - first[u]);
      for (size_t q = 0; q < n_q; ++q)
        best(q, u) = StdScore(queries.embeddings.row(q).transpose(), win);
    }
    for (VocabClass v : cfg.vocabs) {
      SearchCondition cond;
      cond.window = labels[c];
      cond.vocab = v;
      for (size_t q = 0; q < n_q; ++q) {
        auto it = split.find(queries.words[q]);
        if (it == split.end() || it->second != v) continue;
        for (size_t u = 0; u < n_u; ++u)
          cond.scores.push_back({best(q, u), contains[u].count(queries.words[q]) > 0});
      }
      for (const auto &s : cond.scores) (s.positive ? cond.positives : cond.negatives)++;
      if (cond.positives == 0 || cond.negatives == 0) continue;
      cond.eer = EqualErrorRate(cond.scores);
      cond.histogram = ComputeHistogram(cond.scores);
      out.push_back(std::move(cond));
    }
  }
  return out;
}

SearchQueries SpokenQueries(const ParamStore &params, const EncoderConfig &enc,
                            const std::vector<ManifestRecord> &records,
                            const std::vector<FeatureSequence> &features,
                            int num_threads) {
  AWE_CHECK(records.size() == features.size(),
            "query records and features differ in length");
  AWE_CHECK(!records.empty(), "no queries");
  SearchQueries q;
  for (const auto &r : records) q.words.push_back(FoldCase(r.word));
  q.embeddings = EmbedAudioParallel(params, enc, features, num_threads);
  return q;
}

SearchQueries TextQueries(const ParamStore &params, const EncoderConfig &enc,
                          const std::vector<std::string> &words,
                          const Lexicon &lexicon) {
  std::map<std::string, PhonemeSequence> folded;
  for (const auto &[w, p] : lexicon) folded.emplace(FoldCase(w), p);
  SearchQueries q;
  std::vector<PhonemeSequence> texts;
  std::set<std::string> seen;
  for (const auto &w : words) {
    std::string f = FoldCase(w);
    if (!seen.insert(f).second) continue;
    auto it = folded.find(f);
    if (it == folded.end()) AWE_ERR("query word \"", w, "\" has no lexicon entry");
    q.words.push_back(f);
    texts.push_back(it->second);
  }
  AWE_CHECK(!texts.empty(), "no queries");
  q.embeddings = EncodeText(params, enc, texts).vectors;
  return q;
}

}  // namespace awe
