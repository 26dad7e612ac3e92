// frontend/manifest.h

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

#ifndef AWE_FRONTEND_MANIFEST_H_
#define AWE_FRONTEND_MANIFEST_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "frontend/feature-io.h"

namespace awe {

enum class Split { kTrain, kTest };

const char *SplitName(Split s);
Split ParseSplit(const std::string &s);

/// One word segment. Boundaries are precomputed (they stand in for forced
/// alignments); the features of the segment live in `feature_path`,
/// relative to the manifest's directory unless absolute.
struct ManifestRecord {
  std::string id;
  std::string word;
  Split split = Split::kTrain;
  std::string feature_path;
  double start_s = 0.0;
  double end_s = 0.0;
  std::string speaker;

  bool operator==(const ManifestRecord &) const = default;
};

/// A continuous search utterance for spoken term detection / keyword
/// spotting, with the word spans it contains (seconds, relative to the start
/// of its feature file).
struct WordSpan {
  std::string word;
  double start_s = 0.0;
  double end_s = 0.0;
  bool operator==(const WordSpan &) const = default;
};

struct SearchUtterance {
  std::string id;
  std::string feature_path;
  std::string speaker;
  std::vector<WordSpan> words;
  bool operator==(const SearchUtterance &) const = default;
};

using PhonemeSequence = std::vector<int>;
/// word -> phoneme ids; ordered so iteration is deterministic.
using Lexicon = std::map<std::string, PhonemeSequence>;

// JSON Lines, one object per line with exactly the fields above.
std::string ManifestToJsonl(const std::vector<ManifestRecord> &records);
std::vector<ManifestRecord> ManifestFromJsonl(const std::string &text);
void WriteManifest(const std::vector<ManifestRecord> &records,
                   const std::filesystem::path &path);
std::vector<ManifestRecord> ReadManifest(const std::filesystem::path &path);

void WriteSearchManifest(const std::vector<SearchUtterance> &utts,
                         const std::filesystem::path &path);
std::vector<SearchUtterance> ReadSearchManifest(
    const std::filesystem::path &path);

// Lexicon text format: "word p1 p2 ... pn" per line.
void WriteLexicon(const Lexicon &lex, const std::filesystem::path &path);
Lexicon ReadLexicon(const std::filesystem::path &path);

/// Keeps records with min_s <= end_s - start_s <= max_s (both inclusive).
std::vector<ManifestRecord> DurationFilter(
    const std::vector<ManifestRecord> &records, double min_s = 0.5,
    double max_s = 2.0);

/// Resolves a record's feature path against the manifest location.
std::filesystem::path ResolveFeaturePath(
    const std::filesystem::path &manifest_path, const std::string &feature_path);

/// Loads features for every record; result is parallel to `records`.
std::vector<FeatureSequence> LoadFeatures(
    const std::vector<ManifestRecord> &records,
    const std::filesystem::path &manifest_path);

}  // namespace awe

#endif  // AWE_FRONTEND_MANIFEST_H_
