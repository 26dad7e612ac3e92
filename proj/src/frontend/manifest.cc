// frontend/manifest.cc

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

#include "frontend/manifest.h"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "base/awe-common.h"
#include "base/binary-io.h"

namespace awe {

using nlohmann::ordered_json;

const char *SplitName(Split s) { return s == Split::kTrain ? "train" : "test"; }

Split ParseSplit(const std::string &s) {
  if (s == "train") return Split::kTrain;
  if (s == "test") return Split::kTest;
  AWE_ERR("invalid split \"", s, "\" (expected train or test)");
}

namespace {

ordered_json RecordToJson(const ManifestRecord &r) {
  ordered_json j;
  j["id"] = r.id;
  j["word"] = r.word;
  j["split"] = SplitName(r.split);
  j["feature_path"] = r.feature_path;
  j["start_s"] = r.start_s;
  j["end_s"] = r.end_s;
  j["speaker"] = r.speaker;
  return j;
}

ManifestRecord RecordFromJson(const ordered_json &j) {
  static const std::set<std::string> kFields = {
      "id", "word", "split", "feature_path", "start_s", "end_s", "speaker"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kFields.count(it.key())) AWE_ERR("unknown manifest field \"", it.key(), "\"");
  ManifestRecord r;
  r.id = j.at("id").get<std::string>();
  r.word = j.at("word").get<std::string>();
  r.split = ParseSplit(j.at("split").get<std::string>());
  r.feature_path = j.at("feature_path").get<std::string>();
  r.start_s = j.at("start_s").get<double>();
  r.end_s = j.at("end_s").get<double>();
  r.speaker = j.at("speaker").get<std::string>();
  if (!(r.end_s > r.start_s))
    AWE_ERR("record ", r.id, ": end_s must exceed start_s");
  return r;
}

template <typename Fn>
void ForEachJsonLine(const std::string &text, Fn fn) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(ordered_json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      AWE_ERR("line ", lineno, ": ", e.what());
    } catch (const Error &e) {
      AWE_ERR("line ", lineno, ": ", e.what());
    }
  }
}

}  // namespace

std::string ManifestToJsonl(const std::vector<ManifestRecord> &records) {
  std::string out;
  for (const auto &r : records) {
    out += RecordToJson(r).dump();
    out += '\n';
  }
  return out;
}

std::vector<ManifestRecord> ManifestFromJsonl(const std::string &text) {
  std::vector<ManifestRecord> records;
  std::set<std::string> seen;
  ForEachJsonLine(text, [&](const ordered_json &j) {
    ManifestRecord r = RecordFromJson(j);
    if (!seen.insert(r.id).second) AWE_ERR("duplicate record id ", r.id);
    records.push_back(std::move(r));
  });
  return records;
}

void WriteManifest(const std::vector<ManifestRecord> &records,
                   const std::filesystem::path &path) {
  WriteFileBytes(path, ManifestToJsonl(records));
}

std::vector<ManifestRecord> ReadManifest(const std::filesystem::path &path) {
  try {
    return ManifestFromJsonl(ReadFileBytes(path));
  } catch (const Error &e) {
    AWE_ERR(path.string(), ": ", e.what());
  }
}

void WriteSearchManifest(const std::vector<SearchUtterance> &utts,
                         const std::filesystem::path &path) {
  std::string out;
  for (const auto &u : utts) {
    ordered_json j;
    j["id"] = u.id;
    j["feature_path"] = u.feature_path;
    j["speaker"] = u.speaker;
    ordered_json words = ordered_json::array();
    for (const auto &w : u.words) {
      ordered_json wj;
      wj["word"] = w.word;
      wj["start_s"] = w.start_s;
      wj["end_s"] = w.end_s;
      words.push_back(std::move(wj));
    }
    j["words"] = std::move(words);
    out += j.dump();
    out += '\n';
  }
  WriteFileBytes(path, out);
}

std::vector<SearchUtterance> ReadSearchManifest(
    const std::filesystem::path &path) {
  std::vector<SearchUtterance> utts;
  std::set<std::string> seen;
  try {
    ForEachJsonLine(ReadFileBytes(path), [&](const ordered_json &j) {
      SearchUtterance u;
      u.id = j.at("id").get<std::string>();
      u.feature_path = j.at("feature_path").get<std::string>();
      u.speaker = j.at("speaker").get<std::string>();
      for (const auto &wj : j.at("words")) {
        WordSpan w{wj.at("word").get<std::string>(),
                   wj.at("start_s").get<double>(),
                   wj.at("end_s").get<double>()};
        if (!(w.end_s > w.start_s))
          AWE_ERR("utterance ", u.id, ": empty word span");
        u.words.push_back(std::move(w));
      }
      if (!seen.insert(u.id).second) AWE_ERR("duplicate utterance id ", u.id);
      utts.push_back(std::move(u));
    });
  } catch (const Error &e) {
    AWE_ERR(path.string(), ": ", e.what());
  }
  return utts;
}

void WriteLexicon(const Lexicon &lex, const std::filesystem::path &path) {
  std::ostringstream os;
  for (const auto &[word, phones] : lex) {
    os << word;
    for (int p : phones) os << ' ' << p;
    os << '\n';
  }
  WriteFileBytes(path, os.str());
}

Lexicon ReadLexicon(const std::filesystem::path &path) {
  std::istringstream is(ReadFileBytes(path));
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    PhonemeSequence phones;
    int p;
    while (ls >> p) {
      if (p < 0) AWE_ERR(path.string(), ":", lineno, ": negative phoneme id");
      phones.push_back(p);
    }
    if (!ls.eof())
      AWE_ERR(path.string(), ":", lineno, ": phoneme ids must be integers");
    if (phones.empty())
      AWE_ERR(path.string(), ":", lineno, ": word without phonemes");
    if (!lex.emplace(word, std::move(phones)).second)
      AWE_ERR(path.string(), ":", lineno, ": duplicate word ", word);
  }
  return lex;
}

std::vector<ManifestRecord> DurationFilter(
    const std::vector<ManifestRecord> &records, double min_s, double max_s) {
  // Boundaries are decimal seconds; absorb representation error so that e.g.
  // 0.1 .. 0.6 counts as exactly 0.5 s.
  constexpr double kSlack = 1e-9;
  std::vector<ManifestRecord> kept;
  for (const auto &r : records) {
    double d = r.end_s - r.start_s;
    if (d >= min_s - kSlack && d <= max_s + kSlack) kept.push_back(r);
  }
  return kept;
}

std::filesystem::path ResolveFeaturePath(
    const std::filesystem::path &manifest_path,
    const std::string &feature_path) {
  std::filesystem::path p(feature_path);
  if (p.is_absolute()) return p;
  return manifest_path.parent_path() / p;
}

std::vector<FeatureSequence> LoadFeatures(
    const std::vector<ManifestRecord> &records,
    const std::filesystem::path &manifest_path) {
  std::vector<FeatureSequence> out;
  out.reserve(records.size());
  for (const auto &r : records)
    out.push_back(ReadFeatures(ResolveFeaturePath(manifest_path, r.feature_path)));
  return out;
}

}  // namespace awe
