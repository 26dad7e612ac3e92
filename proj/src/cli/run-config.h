// cli/run-config.h

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

#ifndef AWE_CLI_RUN_CONFIG_H_
#define AWE_CLI_RUN_CONFIG_H_

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "encoders/sequence-encoder.h"
#include "eval/windowed-search.h"
#include "frontend/mel-features.h"
#include "synth/synth-corpus.h"
#include "training/trainer.h"

namespace awe {

/// Everything a command can be configured with. Loaded from a JSON file of
/// flat dotted keys ("train.lr_max"); nested objects are flattened the same
/// way. Precedence: built-in defaults < config file < --set < dedicated flags.
struct RunConfig {
  SynthConfig synth;
  EncoderConfig encoder;
  TrainConfig train;
  MelConfig mel;
  SearchConfig search;
  std::string eval_vocab = "both";  // "iv" / "oov" / "both"
  double min_duration = 0.5;        // seconds, inclusive
  double max_duration = 2.0;
  std::string corpus_dir;
  std::string checkpoint;
  std::string report;
  int threads = 0;  // 0: all available cores

  RunConfig();
  /// Vocabulary classes selected by eval_vocab.
  std::vector<VocabClass> Vocabs() const;
  void Validate() const;
};

struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(RunConfig *, const nlohmann::json &)> set;
  std::function<nlohmann::json(const RunConfig &)> get;
};

/// Every accepted key, in documentation order.
const std::vector<ConfigKey> &ConfigKeys();

/// Applies one key; throws ConfigError naming the key if it is unknown or the
/// value has the wrong type.
void ApplyConfigValue(RunConfig *cfg, const std::string &key,
                      const nlohmann::json &value);

/// Applies every key of a (possibly nested) JSON object.
void ApplyConfigJson(RunConfig *cfg, const nlohmann::json &obj);
void ApplyConfigFile(RunConfig *cfg, const std::filesystem::path &path);

/// "key=value"; the value is parsed as JSON and, failing that, taken as a
/// string.
void ApplyConfigAssignment(RunConfig *cfg, const std::string &assignment);

/// Resolved configuration as a flat JSON object in key order.
nlohmann::ordered_json ConfigToJson(const RunConfig &cfg);

/// Help text listing every key with its default.
std::string ConfigKeysHelp();

}  // namespace awe

#endif  // AWE_CLI_RUN_CONFIG_H_
