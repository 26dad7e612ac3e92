// cli/run-config.cc

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

#include "cli/run-config.h"

#include <fstream>
#include <sstream>

#include "base/binary-io.h"

namespace awe {

namespace {

using nlohmann::json;

[[noreturn]] void BadType(const std::string &key, const char *expected,
                          const json &v) {
  throw ConfigError("config key '" + key + "': expected " + expected +
                    ", got " + v.dump());
}

template <typename T>
T As(const std::string &key, const json &v);

template <>
int As<int>(const std::string &key, const json &v) {
  if (!v.is_number_integer()) BadType(key, "an integer", v);
  return v.get<int>();
}

template <>
uint64_t As<uint64_t>(const std::string &key, const json &v) {
  if (!v.is_number_integer() || v.get<int64_t>() < 0)
    BadType(key, "a non-negative integer", v);
  return v.get<uint64_t>();
}

template <>
double As<double>(const std::string &key, const json &v) {
  if (!v.is_number()) BadType(key, "a number", v);
  return v.get<double>();
}

template <>
bool As<bool>(const std::string &key, const json &v) {
  if (!v.is_boolean()) BadType(key, "true or false", v);
  return v.get<bool>();
}

template <>
std::string As<std::string>(const std::string &key, const json &v) {
  if (!v.is_string()) BadType(key, "a string", v);
  return v.get<std::string>();
}

template <>
std::vector<double> As<std::vector<double>>(const std::string &key,
                                            const json &v) {
  if (!v.is_array()) BadType(key, "an array of numbers", v);
  std::vector<double> out;
  for (const auto &e : v) out.push_back(As<double>(key, e));
  return out;
}

template <typename T>
ConfigKey Field(const std::string &name, const std::string &help,
                T &(*ref)(RunConfig &)) {
  return ConfigKey{
      name, help,
      [name, ref](RunConfig *c, const json &v) { ref(*c) = As<T>(name, v); },
      [ref](const RunConfig &c) {
        return json(ref(const_cast<RunConfig &>(c)));
      }};
}

#define AWE_FIELD(T, key, member, help) \
  Field<T>(key, help, [](RunConfig &c) -> T & { return c.member; })

std::vector<ConfigKey> BuildKeys() {
  std::vector<ConfigKey> k = {
      AWE_FIELD(int, "synth.n_classes", synth.n_classes, "word classes"),
      AWE_FIELD(int, "synth.n_oov_classes", synth.n_oov_classes,
                "classes held out of training (the last ones)"),
      AWE_FIELD(int, "synth.instances_per_class", synth.instances_per_class,
                "instances of every class"),
      AWE_FIELD(int, "synth.n_speakers", synth.n_speakers, "speakers"),
      AWE_FIELD(int, "synth.feat_dim", synth.feat_dim, "feature dimension F"),
      AWE_FIELD(int, "synth.proto_len_min", synth.proto_len_min,
                "shortest prototype, frames"),
      AWE_FIELD(int, "synth.proto_len_max", synth.proto_len_max,
                "longest prototype, frames"),
      AWE_FIELD(double, "synth.warp_min", synth.warp_min, "smallest time warp"),
      AWE_FIELD(double, "synth.warp_max", synth.warp_max, "largest time warp"),
      AWE_FIELD(double, "synth.noise_sigma", synth.noise_sigma,
                "per-frame noise standard deviation"),
      AWE_FIELD(double, "synth.speaker_sigma", synth.speaker_sigma,
                "speaker offset standard deviation"),
      AWE_FIELD(int, "synth.phoneme_vocab", synth.phoneme_vocab,
                "phoneme inventory size K"),
      AWE_FIELD(uint64_t, "synth.seed", synth.seed, "corpus seed"),
      AWE_FIELD(double, "synth.train_fraction", synth.train_fraction,
                "share of each in-vocabulary class used for training"),
      AWE_FIELD(int, "synth.words_per_utterance", synth.words_per_utterance,
                "words in each search utterance"),
      AWE_FIELD(int, "synth.gap_min", synth.gap_min,
                "shortest filler between words, frames"),
      AWE_FIELD(int, "synth.gap_max", synth.gap_max,
                "longest filler between words, frames"),
      ConfigKey{"encoder.kind", "pooled or recurrent",
                [](RunConfig *c, const json &v) {
                  c->encoder.kind =
                      ParseEncoderKind(As<std::string>("encoder.kind", v));
                },
                [](const RunConfig &c) {
                  return json(EncoderKindName(c.encoder.kind));
                }},
      AWE_FIELD(int, "encoder.hidden", encoder.hidden,
                "hidden width (full-scale: 256)"),
      AWE_FIELD(int, "encoder.layers", encoder.layers,
                "recurrent layers (full-scale: 3)"),
      AWE_FIELD(bool, "encoder.bidirectional", encoder.bidirectional,
                "bidirectional recurrent layers (full-scale: true)"),
      AWE_FIELD(int, "encoder.embed_dim", encoder.embed_dim,
                "shared embedding size D (full-scale: 512)"),
      AWE_FIELD(int, "encoder.text_embed_dim", encoder.text_embed_dim,
                "phoneme embedding size"),
      AWE_FIELD(int, "encoder.pool_segments", encoder.pool_segments,
                "pooled encoder: equal-duration segments averaged separately"),
      AWE_FIELD(int, "train.batch_classes", train.batch_classes,
                "distinct words per batch N (full-scale: 128)"),
      AWE_FIELD(int, "train.positives", train.positives,
                "instances per word M"),
      AWE_FIELD(double, "train.lr_max", train.lr_max, "peak learning rate (full-scale: 1e-3)"),
      AWE_FIELD(double, "train.weight_decay", train.weight_decay,
                "AdamW weight decay (full-scale: 1e-4)"),
      AWE_FIELD(double, "train.clip_norm", train.clip_norm,
                "global gradient norm limit (full-scale: 1.0)"),
      AWE_FIELD(int, "train.epochs", train.epochs, "epochs (full-scale: 30)"),
      AWE_FIELD(double, "train.warmup_frac", train.warmup_frac,
                "share of steps spent warming up (full-scale: 0.2)"),
      AWE_FIELD(double, "train.beta1", train.beta1, "Adam beta1"),
      AWE_FIELD(double, "train.beta2", train.beta2, "Adam beta2"),
      AWE_FIELD(double, "train.eps", train.eps, "Adam epsilon"),
      AWE_FIELD(uint64_t, "train.seed", train.seed, "initialization and sampling seed"),
      AWE_FIELD(bool, "train.normalize_inputs", train.normalize_inputs,
                "start the audio input normalization from training statistics"),
      AWE_FIELD(double, "loss.alpha1", train.weights.alpha1,
                "audio-text loss weight (full-scale: 0.1)"),
      AWE_FIELD(double, "loss.alpha2", train.weights.alpha2,
                "audio-audio loss weight (full-scale: 1.0)"),
      ConfigKey{"loss.dwd_reduction", "sum or mean over the N*M instances",
                [](RunConfig *c, const json &v) {
                  std::string s = As<std::string>("loss.dwd_reduction", v);
                  if (s != "sum" && s != "mean")
                    throw ConfigError("config key 'loss.dwd_reduction': "
                                      "expected \"sum\" or \"mean\"");
                  c->train.dwd.mean_reduction = s == "mean";
                },
                [](const RunConfig &c) {
                  return json(c.train.dwd.mean_reduction ? "mean" : "sum");
                }},
      AWE_FIELD(bool, "loss.dwd_scaled", train.dwd.temperature_scaled,
                "scale the audio-audio softmax logits by the temperature"),
      AWE_FIELD(double, "mel.win_ms", mel.win_ms, "analysis window, ms"),
      AWE_FIELD(double, "mel.hop_ms", mel.hop_ms, "frame shift, ms"),
      AWE_FIELD(int, "mel.n_mels", mel.n_mels, "mel bands"),
      AWE_FIELD(int, "mel.fft_size", mel.fft_size, "FFT length"),
      AWE_FIELD(double, "mel.log_floor", mel.log_floor, "energy floor before the log"),
      AWE_FIELD(std::vector<double>, "eval.windows", search.windows,
                "search window sizes, seconds"),
      AWE_FIELD(double, "eval.hop_fraction", search.hop_fraction,
                "window hop as a fraction of the window"),
      AWE_FIELD(bool, "eval.aligned", search.aligned,
                "also score ground-truth word spans"),
      AWE_FIELD(std::string, "eval.vocab", eval_vocab, "iv, oov or both"),
      AWE_FIELD(double, "data.min_duration", min_duration,
                "shortest segment kept, seconds"),
      AWE_FIELD(double, "data.max_duration", max_duration,
                "longest segment kept, seconds"),
      AWE_FIELD(std::string, "paths.corpus", corpus_dir, "corpus directory"),
      AWE_FIELD(std::string, "paths.checkpoint", checkpoint, "model checkpoint"),
      AWE_FIELD(std::string, "paths.report", report, "report output"),
      AWE_FIELD(int, "run.threads", threads, "worker threads, 0 = all cores"),
  };
  return k;
}

#undef AWE_FIELD

void Flatten(const std::string &prefix, const json &obj,
             std::vector<std::pair<std::string, json>> *out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      Flatten(key, *it, out);
    else
      out->emplace_back(key, *it);
  }
}

}  // namespace

RunConfig::RunConfig() = default;

std::vector<VocabClass> RunConfig::Vocabs() const {
  if (eval_vocab == "both") return {VocabClass::kIV, VocabClass::kOOV};
  return {ParseVocabClass(eval_vocab)};
}

void RunConfig::Validate() const {
  synth.Validate();
  encoder.Validate();
  train.Validate();
  mel.Validate();
  search.Validate();
  Vocabs();
  if (threads < 0) throw ConfigError("run.threads must be >= 0");
  if (!(min_duration <= max_duration))
    throw ConfigError("data.min_duration exceeds data.max_duration");
}

const std::vector<ConfigKey> &ConfigKeys() {
  static const std::vector<ConfigKey> keys = BuildKeys();
  return keys;
}

void ApplyConfigValue(RunConfig *cfg, const std::string &key,
                      const json &value) {
  for (const auto &k : ConfigKeys()) {
    if (k.name == key) {
      k.set(cfg, value);
      return;
    }
  }
  throw ConfigError("unknown config key '" + key + "'");
}

void ApplyConfigJson(RunConfig *cfg, const json &obj) {
  if (!obj.is_object()) throw ConfigError("config must be a JSON object");
  std::vector<std::pair<std::string, json>> flat;
  Flatten("", obj, &flat);
  for (const auto &[k, v] : flat) ApplyConfigValue(cfg, k, v);
}

void ApplyConfigFile(RunConfig *cfg, const std::filesystem::path &path) {
  json obj;
  try {
    obj = json::parse(ReadFileBytes(path));
  } catch (const json::exception &e) {
    throw ConfigError(path.string() + ": invalid JSON: " + e.what());
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  try {
    ApplyConfigJson(cfg, obj);
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void ApplyConfigAssignment(RunConfig *cfg, const std::string &assignment) {
  size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got '" + assignment + "'");
  std::string key = assignment.substr(0, eq);
  std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  ApplyConfigValue(cfg, key, value);
}

nlohmann::ordered_json ConfigToJson(const RunConfig &cfg) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto &k : ConfigKeys()) out[k.name] = k.get(cfg);
  return out;
}

std::string ConfigKeysHelp() {
  RunConfig defaults;
  std::ostringstream os;
  os << "Config keys (JSON file with flat dotted keys, or --set key=value):\n";
  for (const auto &k : ConfigKeys())
    os << "  " << k.name << " = " << k.get(defaults).dump() << "\n      "
       << k.help << "\n";
  return os.str();
}

}  // namespace awe
