// eval/windowed-search.h

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

#ifndef AWE_EVAL_WINDOWED_SEARCH_H_
#define AWE_EVAL_WINDOWED_SEARCH_H_

#include <map>
#include <string>
#include <vector>

#include "encoders/encoder.h"
#include "eval/metrics.h"
#include "eval/trials.h"
#include "frontend/manifest.h"

namespace awe {

struct FrameSpan {
  int start = 0;
  int length = 0;
  bool operator==(const FrameSpan &) const = default;
};

/// Fixed-length windows of round(window_s / 10 ms) frames every
/// round(hop_s / 10 ms) frames. After the full windows, the remainder
/// starting at the next hop is kept as a shorter window if it holds at least
/// half a window. An utterance no longer than one window yields one window.
std::vector<FrameSpan> SegmentWindows(int num_frames, double window_s,
                                      double hop_s);

/// The utterance's own word spans, in frames, clipped to [0, num_frames).
std::vector<FrameSpan> AlignedSpans(const SearchUtterance &utt, int num_frames);

FeatureSequence SliceFrames(const FeatureSequence &seq, const FrameSpan &span);

/// max over rows w of cos(query, w).
double StdScore(const Eigen::VectorXd &query, const Eigen::MatrixXd &windows);

struct SearchConfig {
  std::vector<double> windows = {0.2, 0.3, 0.4, 0.6};  // seconds
  double hop_fraction = 0.5;  // hop = window * hop_fraction
  bool aligned = true;        // also score the ground-truth word spans
  std::vector<VocabClass> vocabs = {VocabClass::kIV, VocabClass::kOOV};
  int num_threads = 1;
  void Validate() const;
};

/// One query per row; words are case-folded.
struct SearchQueries {
  std::vector<std::string> words;
  Eigen::MatrixXd embeddings;
};

struct SearchCondition {
  std::string window;  // "0.30" style, or "aligned"
  VocabClass vocab = VocabClass::kIV;
  double eer = 0.0;
  uint64_t positives = 0;
  uint64_t negatives = 0;
  ScoreHistogram histogram;
  std::vector<LabeledScore> scores;  // query-major, utterance-minor
};

std::string WindowLabel(double window_s);
inline constexpr char kAlignedLabel[] = "aligned";

/// Scores every query against every utterance (max cosine over its windows)
/// and computes one EER per (window, vocabulary class). A trial is positive
/// iff the utterance contains the query word. Conditions without both
/// labels are skipped.
std::vector<SearchCondition> RunSearch(
    const ParamStore &params, const EncoderConfig &enc,
    const SearchQueries &queries, const std::vector<SearchUtterance> &utts,
    const std::vector<FeatureSequence> &utt_features,
    const std::map<std::string, VocabClass> &split, const SearchConfig &cfg);

/// Spoken queries: audio embeddings of the query segments.
SearchQueries SpokenQueries(const ParamStore &params, const EncoderConfig &enc,
                            const std::vector<ManifestRecord> &records,
                            const std::vector<FeatureSequence> &features,
                            int num_threads);

/// Written queries: text embeddings of each distinct word in `words`, which
/// must all be in the lexicon.
SearchQueries TextQueries(const ParamStore &params, const EncoderConfig &enc,
                          const std::vector<std::string> &words,
                          const Lexicon &lexicon);

}  // namespace awe

#endif  // AWE_EVAL_WINDOWED_SEARCH_H_
