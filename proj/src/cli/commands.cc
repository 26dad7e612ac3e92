// cli/commands.cc

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


#include "cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "base/binary-io.h"
#include "base/parallel.h"
#include "cli/grad-check.h"
#include "encoders/encoder.h"
#include "eval/report.h"
#include "frontend/mel-features.h"
#include "frontend/wave-reader.h"
#include "synth/synth-corpus.h"

namespace awe {

namespace fs = std::filesystem;

namespace {

constexpr char kPrecedence[] =
    "Settings are resolved as: built-in defaults, then --config, then each "
    "--set in order, then the dedicated flags of the command.";

struct CommonOptions {
  std::string config;
  std::vector<std::string> sets;
  std::optional<int> threads;
};

void AddCommonOptions(CLI::App *sub, CommonOptions *o, bool with_keys) {
  sub->add_option("--config", o->config, "JSON config file of dotted keys");
  sub->add_option("--set", o->sets, "override one config key, key=value");
  sub->add_option("--threads", o->threads,
                  "worker threads (default: all cores)");
  std::string footer = kPrecedence;
  if (with_keys) footer += "\n\n" + ConfigKeysHelp();
  sub->footer(footer);
}

RunConfig LoadRunConfig(const CommonOptions &o) {
  RunConfig cfg;
  if (!o.config.empty()) {
    if (!fs::is_regular_file(o.config))
      throw ConfigError("config file not found: " + o.config);
    ApplyConfigFile(&cfg, o.config);
  }
  for (const auto &s : o.sets) ApplyConfigAssignment(&cfg, s);
  if (o.threads) cfg.threads = *o.threads;
  return cfg;
}

int NumThreads(const RunConfig &cfg) {
  return cfg.threads > 0 ? cfg.threads : DefaultThreadCount();
}

fs::path RequireFile(const std::string &path, const char *what) {
  if (path.empty()) throw ConfigError(std::string("missing ") + what);
  if (!fs::is_regular_file(path))
    throw ConfigError(std::string(what) + " not found: " + path);
  return path;
}

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Shortest(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct LoadedManifest {
  std::vector<ManifestRecord> records;
  std::vector<FeatureSequence> features;
};

LoadedManifest LoadManifest(const fs::path &path, const RunConfig &cfg) {
  LoadedManifest m;
  m.records = DurationFilter(ReadManifest(path), cfg.min_duration,
                             cfg.max_duration);
  m.features = LoadFeatures(m.records, path);
  return m;
}

fs::path DefaultLexicon(const fs::path &manifest) {
  return manifest.parent_path() / "lexicon.txt";
}

void WriteText(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  WriteFileBytes(path, text);
}

// ---------------------------------------------------------------- gen-synth

struct GenSynthOptions {
  std::string out_dir;
  std::optional<uint64_t> seed;
};

int CmdGenSynth(const CommonOptions &common, const GenSynthOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  if (o.seed) cfg.synth.seed = *o.seed;
  std::string out = !o.out_dir.empty() ? o.out_dir : cfg.corpus_dir;
  if (out.empty()) throw ConfigError("gen-synth needs --out-dir");
  cfg.Validate();
  SynthCorpus corpus = GenerateCorpus(cfg.synth);
  WriteCorpus(corpus, out);
  std::cout << "classes " << corpus.classes.size() << " (oov "
            << cfg.synth.n_oov_classes << ")\n"
            << "train instances " << corpus.train.size() << "\n"
            << "test instances " << corpus.test.size() << "\n"
            << "queries " << corpus.queries.size() << "\n"
            << "search utterances " << corpus.search.size() << "\n"
            << "separability " << Fixed(ClassSeparability(corpus), 4) << "\n";
  return kExitOk;
}

// -------------------------------------------------------------------- train

struct TrainOptions {
  std::string manifest;
  std::string lexicon;
  std::string out;
  std::string resume;
  std::optional<double> alpha1, alpha2, lr_max;
  std::optional<int> epochs, batch_classes, positives;
  std::optional<uint64_t> seed;
  std::optional<std::string> encoder;
};

struct TrainingCorpus {
  TrainData data;
  EncoderConfig encoder;
};

TrainingCorpus LoadTrainingCorpus(const RunConfig &cfg, const fs::path &manifest,
                                  const fs::path &lexicon) {
  TrainingCorpus c;
  LoadedManifest m = LoadManifest(manifest, cfg);
  if (m.records.empty())
    throw ConfigError(manifest.string() + ": no records within the duration limits");
  c.data.records = std::move(m.records);
  c.data.features = std::move(m.features);
  c.data.lexicon = ReadLexicon(lexicon);
  c.encoder = ResolveEncoderConfig(cfg.encoder, c.data.features.front().Dim(),
                                   c.data.lexicon);
  return c;
}

TrainResult RunTraining(const RunConfig &cfg, const TrainingCorpus &corpus,
                        const fs::path &out_dir, const fs::path &resume,
                        bool verbose) {
  TrainingPool pool = BuildTrainingPool(corpus.data.records, corpus.data.lexicon);
  const int64_t spe = StepsPerEpoch(pool, cfg.train);
  TrainOutput out;
  out.out_dir = out_dir;
  out.resume_from = resume;
  if (verbose) {
    out.on_step = [spe](const StepMetrics &m) {
      if ((m.step + 1) % spe != 0) return;
      std::cout << "epoch " << m.epoch << " step " << m.step + 1 << " loss "
                << Fixed(m.loss) << " clap " << Fixed(m.clap) << " dwd "
                << Fixed(m.dwd) << " lr " << Shortest(m.lr) << " exp_tau "
                << Fixed(m.exp_tau, 3) << "\n";
    };
  }
  return Train(corpus.data, cfg.train, corpus.encoder, out);
}

int CmdTrain(const CommonOptions &common, const TrainOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  if (o.alpha1) cfg.train.weights.alpha1 = *o.alpha1;
  if (o.alpha2) cfg.train.weights.alpha2 = *o.alpha2;
  if (o.lr_max) cfg.train.lr_max = *o.lr_max;
  if (o.epochs) cfg.train.epochs = *o.epochs;
  if (o.batch_classes) cfg.train.batch_classes = *o.batch_classes;
  if (o.positives) cfg.train.positives = *o.positives;
  if (o.seed) cfg.train.seed = *o.seed;
  if (o.encoder) cfg.encoder.kind = ParseEncoderKind(*o.encoder);
  cfg.Validate();

  std::string manifest = o.manifest;
  if (manifest.empty() && !cfg.corpus_dir.empty())
    manifest = (fs::path(cfg.corpus_dir) / "train.jsonl").string();
  fs::path manifest_path = RequireFile(manifest, "training manifest");
  fs::path lexicon_path = RequireFile(
      o.lexicon.empty() ? DefaultLexicon(manifest_path).string() : o.lexicon,
      "lexicon");
  std::string out = !o.out.empty() ? o.out : cfg.checkpoint;
  if (out.empty()) throw ConfigError("train needs --out");
  if (!o.resume.empty()) RequireFile(o.resume, "resume checkpoint");

  TrainingCorpus corpus = LoadTrainingCorpus(cfg, manifest_path, lexicon_path);
  fs::create_directories(out);
  WriteText(fs::path(out) / "config.json", ConfigToJson(cfg).dump(2) + "\n");
  TrainResult r = RunTraining(cfg, corpus, out, o.resume, true);
  std::cout << "steps " << r.total_steps << "\n"
            << "model " << (fs::path(out) / "model.awep").string() << "\n";
  return kExitOk;
}

// -------------------------------------------------------------------- embed

struct EmbedOptions {
  std::string model;
  std::vector<std::string> manifests;
  std::string lexicon;
  std::string out;
  bool no_text = false;
};

int CmdEmbed(const CommonOptions &common, const EmbedOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  cfg.Validate();
  std::string model_path = !o.model.empty() ? o.model : cfg.checkpoint;
  ParamStore params = LoadParamStore(RequireFile(model_path, "model"));
  std::vector<ManifestRecord> records;
  std::vector<FeatureSequence> features;
  for (const auto &m : o.manifests) {
    LoadedManifest lm = LoadManifest(RequireFile(m, "manifest"), cfg);
    records.insert(records.end(), lm.records.begin(), lm.records.end());
    for (auto &f : lm.features) features.push_back(std::move(f));
  }
  std::optional<Lexicon> lexicon;
  if (!o.no_text) {
    fs::path lex = o.lexicon.empty() ? DefaultLexicon(o.manifests.front())
                                     : fs::path(o.lexicon);
    if (!o.lexicon.empty() || fs::exists(lex))
      lexicon = ReadLexicon(RequireFile(lex.string(), "lexicon"));
  }
  EmbeddingTable table = EmbedRecords(params, records, features,
                                      lexicon ? &*lexicon : nullptr,
                                      NumThreads(cfg));
  WriteEmbeddings(table, o.out);
  std::cout << "embeddings " << table.Size() << " dim " << table.Dim() << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ eval-wd

struct EvalWdOptions {
  std::string embeddings;
  std::vector<std::string> manifests;
  std::string out;
  std::string trials_dir;
  std::string histogram_dir;
};

std::string ConditionName(const WdCondition &c) {
  return std::string(c.cross ? "wd_cross_" : "wd_") + VocabClassName(c.vocab);
}

int CmdEvalWd(const CommonOptions &common, const EvalWdOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  cfg.Validate();
  if (o.manifests.size() != 2)
    throw ConfigError("--manifests expects the train and test manifests");
  EmbeddingTable table = ReadEmbeddings(RequireFile(o.embeddings, "embeddings"));
  auto train = DurationFilter(ReadManifest(RequireFile(o.manifests[0], "manifest")),
                              cfg.min_duration, cfg.max_duration);
  auto test = DurationFilter(ReadManifest(RequireFile(o.manifests[1], "manifest")),
                             cfg.min_duration, cfg.max_duration);
  auto conds = EvalWordDiscrimination(table, train, test, cfg.Vocabs(),
                                      NumThreads(cfg));
  EvalReport report;
  report.AddWordDiscrimination(conds);
  WriteText(o.out, report.Dump());
  for (const auto &c : conds) {
    std::cout << ConditionName(c) << " ap " << Fixed(c.ap) << " positives "
              << c.positives << " negatives " << c.negatives << "\n";
    if (!o.trials_dir.empty())
      WriteText(fs::path(o.trials_dir) / (ConditionName(c) + "_trials.csv"),
                c.trials.ToCsv());
    if (!o.histogram_dir.empty())
      WriteText(fs::path(o.histogram_dir) / (ConditionName(c) + ".csv"),
                c.histogram.ToCsv());
  }
  return kExitOk;
}

// ------------------------------------------------------------ eval-std/kws

struct SearchOptions {
  std::string model;
  std::string corpus;
  std::vector<double> windows;
  std::string out;
  std::string histogram_dir;
};

int CmdSearch(const CommonOptions &common, const SearchOptions &o, bool spoken) {
  const std::string task = spoken ? "std" : "kws";
  RunConfig cfg = LoadRunConfig(common);
  if (!o.windows.empty()) cfg.search.windows = o.windows;
  cfg.search.vocabs = cfg.Vocabs();
  cfg.search.num_threads = NumThreads(cfg);
  cfg.Validate();

  std::string corpus = !o.corpus.empty() ? o.corpus : cfg.corpus_dir;
  if (corpus.empty()) throw ConfigError(task + " needs --corpus");
  fs::path dir(corpus);
  std::string model_path = !o.model.empty() ? o.model : cfg.checkpoint;
  ParamStore params = LoadParamStore(RequireFile(model_path, "model"));
  EncoderConfig enc = InferEncoderConfig(params);

  auto train = DurationFilter(
      ReadManifest(RequireFile((dir / "train.jsonl").string(), "manifest")),
      cfg.min_duration, cfg.max_duration);
  auto test = DurationFilter(
      ReadManifest(RequireFile((dir / "test.jsonl").string(), "manifest")),
      cfg.min_duration, cfg.max_duration);
  auto split = IvOovSplit(train, test);

  fs::path query_path = RequireFile((dir / "queries.jsonl").string(), "queries");
  LoadedManifest queries = LoadManifest(query_path, cfg);
  SearchQueries q;
  if (spoken) {
    q = SpokenQueries(params, enc, queries.records, queries.features,
                      cfg.search.num_threads);
  } else {
    std::vector<std::string> words;
    for (const auto &r : queries.records) words.push_back(r.word);
    Lexicon lex = ReadLexicon(RequireFile((dir / "lexicon.txt").string(), "lexicon"));
    q = TextQueries(params, enc, words, lex);
  }

  fs::path search_path = RequireFile((dir / "search.jsonl").string(), "search manifest");
  auto utts = ReadSearchManifest(search_path);
  std::vector<FeatureSequence> utt_features;
  for (const auto &u : utts)
    utt_features.push_back(ReadFeatures(ResolveFeaturePath(search_path, u.feature_path)));

  auto conds = RunSearch(params, enc, q, utts, utt_features, split, cfg.search);
  EvalReport report;
  report.AddSearch(task, conds);
  WriteText(o.out, report.Dump());
  for (const auto &c : conds) {
    std::string name = task + "_" + VocabClassName(c.vocab) + "_" + c.window;
    std::cout << name << " eer " << Fixed(c.eer) << " positive_mean "
              << Fixed(c.histogram.positive_stats.mean) << " negative_mean "
              << Fixed(c.histogram.negative_stats.mean) << "\n";
    if (!o.histogram_dir.empty())
      WriteText(fs::path(o.histogram_dir) / (name + ".csv"), c.histogram.ToCsv());
  }
  return kExitOk;
}

// --------------------------------------------------------------- grad-check

struct GradCheckOptions {
  uint64_t seed = 1;
  int num_seeds = 1;
};

int CmdGradCheck(const GradCheckOptions &o) {
  if (o.num_seeds < 1) throw ConfigError("--num-seeds must be >= 1");
  bool ok = true;
  double worst_loss = 0.0, worst_pipeline = 0.0;
  for (int s = 0; s < o.num_seeds; ++s) {
    for (const auto &r : RunGradientChecks(o.seed + s)) {
      std::cout << "seed " << o.seed + s << " " << r.name << " max_rel_error "
                << Shortest(r.max_rel_error) << " tolerance "
                << Shortest(r.tolerance) << " " << (r.passed ? "ok" : "FAILED")
                << "\n";
      ok = ok && r.passed;
      double &worst =
          r.tolerance == kPipelineTolerance ? worst_pipeline : worst_loss;
      worst = std::max(worst, std::isnan(r.max_rel_error) ? INFINITY
                                                          : r.max_rel_error);
    }
  }
  std::cout << "max relative error: losses " << Shortest(worst_loss)
            << ", pipeline " << Shortest(worst_pipeline) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- sweep-alpha

struct SweepOptions {
  std::string corpus;
  std::string grid;
  std::string out;
  std::string work_dir;
};

int CmdSweepAlpha(const CommonOptions &common, const SweepOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  cfg.Validate();
  std::string corpus = !o.corpus.empty() ? o.corpus : cfg.corpus_dir;
  if (corpus.empty()) throw ConfigError("sweep-alpha needs --corpus");
  auto grid = o.grid.empty() ? DefaultAlphaGrid() : ParseAlphaGrid(o.grid);
  fs::path work = !o.work_dir.empty() ? fs::path(o.work_dir)
                                      : fs::path(o.out).parent_path() / "sweep";
  auto rows = SweepAlpha(cfg, corpus, grid, work);
  WriteText(o.out, FormatSweepCsv(rows));
  std::cout << FormatSweepCsv(rows);
  return kExitOk;
}

// ---------------------------------------------------------------- featurize

struct FeaturizeOptions {
  std::vector<std::string> wavs;
  std::string out_dir;
};

int CmdFeaturize(const CommonOptions &common, const FeaturizeOptions &o) {
  RunConfig cfg = LoadRunConfig(common);
  cfg.Validate();
  fs::create_directories(o.out_dir);
  for (const auto &w : o.wavs) {
    FeatureSequence f = ComputeLogMel(ReadWave(RequireFile(w, "wave file")), cfg.mel);
    fs::path out = fs::path(o.out_dir) / (fs::path(w).stem().string() + ".feat");
    WriteFeatures(f, out);
    std::cout << out.string() << " frames " << f.NumFrames() << " dim "
              << f.Dim() << "\n";
  }
  return kExitOk;
}

}  // namespace

EncoderConfig ResolveEncoderConfig(const EncoderConfig &base, int feat_dim,
                                   const Lexicon &lexicon) {
  EncoderConfig enc = base;
  enc.feat_dim = feat_dim;
  int max_id = -1;
  for (const auto &[word, phones] : lexicon)
    for (int p : phones) max_id = std::max(max_id, p);
  AWE_CHECK(max_id >= 0, "lexicon has no phonemes");
  enc.text_vocab = max_id + 1;
  enc.Validate();
  return enc;
}

EmbeddingTable EmbedRecords(const ParamStore &params,
                            const std::vector<ManifestRecord> &records,
                            const std::vector<FeatureSequence> &features,
                            const Lexicon *lexicon, int num_threads) {
  AWE_CHECK(records.size() == features.size(),
            "records and features differ in length");
  EncoderConfig enc = InferEncoderConfig(params);
  EmbeddingTable table(enc.embed_dim);
  std::vector<std::string> ids;
  for (const auto &r : records) ids.push_back(r.id);
  table.AddBatch(ids, EmbedAudioParallel(params, enc, features, num_threads));
  if (lexicon != nullptr && !records.empty()) {
    std::vector<std::string> words;
    for (const auto &r : records) words.push_back(r.word);
    SearchQueries text = TextQueries(params, enc, words, *lexicon);
    std::vector<std::string> text_ids;
    for (const auto &w : text.words) text_ids.push_back(kTextIdPrefix + w);
    table.AddBatch(text_ids, text.embeddings);
  }
  return table;
}

std::vector<AlphaSetting> DefaultAlphaGrid() {
  return {{1.0, 0.1}, {1.0, 0.5}, {1.0, 1.0}, {0.1, 1.0}, {0.5, 0.1}};
}

std::vector<AlphaSetting> ParseAlphaGrid(const std::string &text) {
  std::vector<AlphaSetting> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      size_t used1 = 0, used2 = 0;
      std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      AlphaSetting s{std::stod(a, &used1), std::stod(b, &used2)};
      if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(item);
      LossWeights{s.alpha1, s.alpha2}.Validate();
      grid.push_back(s);
    } catch (const std::logic_error &) {
      throw ConfigError("bad --grid entry '" + item + "', expected a1:a2");
    }
  }
  if (grid.empty()) throw ConfigError("--grid is empty");
  return grid;
}

std::string FormatSweepCsv(const std::vector<SweepRow> &rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto &r : rows)
    out += Shortest(r.alpha.alpha1) + "," + Shortest(r.alpha.alpha2) + "," +
           Fixed(r.ap_iv) + "," + Fixed(r.ap_oov) + "," + Fixed(r.ap_cross_iv) +
           "," + Fixed(r.ap_cross_oov) + "\n";
  return out;
}

std::vector<SweepRow> SweepAlpha(const RunConfig &cfg, const fs::path &corpus_dir,
                                 const std::vector<AlphaSetting> &grid,
                                 const fs::path &work_dir) {
  fs::path train_path = RequireFile((corpus_dir / "train.jsonl").string(), "manifest");
  fs::path test_path = RequireFile((corpus_dir / "test.jsonl").string(), "manifest");
  fs::path lex_path = RequireFile((corpus_dir / "lexicon.txt").string(), "lexicon");
  TrainingCorpus corpus = LoadTrainingCorpus(cfg, train_path, lex_path);
  LoadedManifest test = LoadManifest(test_path, cfg);
  const int threads = NumThreads(cfg);

  std::vector<SweepRow> rows;
  for (const auto &a : grid) {
    RunConfig run = cfg;
    run.train.weights = {a.alpha1, a.alpha2};
    fs::path dir = work_dir / ("alpha_" + Shortest(a.alpha1) + "_" +
                               Shortest(a.alpha2));
    fs::create_directories(dir);
    WriteText(dir / "config.json", ConfigToJson(run).dump(2) + "\n");
    TrainResult r = RunTraining(run, corpus, dir, {}, false);
    EmbeddingTable table = EmbedRecords(r.params, test.records, test.features,
                                        &corpus.data.lexicon, threads);
    auto conds = EvalWordDiscrimination(
        table, corpus.data.records, test.records,
        {VocabClass::kIV, VocabClass::kOOV}, threads);
    SweepRow row;
    row.alpha = a;
    for (const auto &c : conds) {
      double *slot = c.vocab == VocabClass::kIV
                         ? (c.cross ? &row.ap_cross_iv : &row.ap_iv)
                         : (c.cross ? &row.ap_cross_oov : &row.ap_oov);
      *slot = c.ap;
    }
    std::cerr << "alpha1 " << Shortest(a.alpha1) << " alpha2 "
              << Shortest(a.alpha2) << " ap_iv " << Fixed(row.ap_iv)
              << " ap_oov " << Fixed(row.ap_oov) << "\n";
    rows.push_back(row);
  }
  return rows;
}

int RunCli(int argc, char **argv) {
  CLI::App app{"Acoustic word embedding workbench: synthetic corpora, "
               "contrastive training and word discrimination / search "
               "evaluation."};
  app.name("awe");
  app.require_subcommand(1);
  app.footer(std::string(kPrecedence) +
             "\nExit codes: 0 success, 1 failed check or runtime error, "
             "2 usage or config error.");

  CommonOptions common;

  GenSynthOptions gs;
  auto *gen = app.add_subcommand("gen-synth", "write a synthetic corpus");
  gen->add_option("--out-dir", gs.out_dir, "output directory (paths.corpus)");
  gen->add_option("--seed", gs.seed, "corpus seed (synth.seed, default 1)");
  AddCommonOptions(gen, &common, true);

  TrainOptions tr;
  auto *train = app.add_subcommand("train", "train both encoders");
  train->add_option("--manifest", tr.manifest,
                    "training manifest (default <paths.corpus>/train.jsonl)");
  train->add_option("--lexicon", tr.lexicon,
                    "lexicon (default: lexicon.txt next to the manifest)");
  train->add_option("--out", tr.out, "output directory (paths.checkpoint)");
  train->add_option("--resume", tr.resume,
                    "continue from an epoch_NNN.awep checkpoint");
  train->add_option("--alpha1", tr.alpha1, "audio-text loss weight (full-scale default 0.1)");
  train->add_option("--alpha2", tr.alpha2, "audio-audio loss weight (full-scale default 1.0)");
  train->add_option("--lr-max", tr.lr_max, "peak learning rate (full-scale default 1e-3)");
  train->add_option("--epochs", tr.epochs, "epochs (full-scale default 30)");
  train->add_option("--batch-classes", tr.batch_classes,
                    "words per batch N (full-scale default 128, desk default 8)");
  train->add_option("--positives", tr.positives, "instances per word M (default 4)");
  train->add_option("--seed", tr.seed, "training seed (default 1)");
  train->add_option("--encoder", tr.encoder, "pooled or recurrent (default pooled)");
  AddCommonOptions(train, &common, true);

  EmbedOptions em;
  auto *embed = app.add_subcommand("embed", "embed manifest segments and their words");
  embed->add_option("--model", em.model, "model checkpoint")->required();
  embed->add_option("--manifest", em.manifests, "one or more manifests")->required();
  embed->add_option("--lexicon", em.lexicon,
                    "lexicon for text entries (default: next to the first manifest)");
  embed->add_option("--out", em.out, "embedding table output")->required();
  embed->add_flag("--no-text", em.no_text, "skip the text:<word> entries");
  AddCommonOptions(embed, &common, false);

  EvalWdOptions wd;
  auto *evwd = app.add_subcommand("eval-wd", "word discrimination average precision");
  evwd->add_option("--embeddings", wd.embeddings, "embedding table")->required();
  evwd->add_option("--manifests", wd.manifests, "train and test manifests")
      ->required()
      ->expected(2);
  evwd->add_option("--out", wd.out, "JSON report")->required();
  evwd->add_option("--trials-out", wd.trials_dir, "directory for trial CSVs");
  evwd->add_option("--histograms", wd.histogram_dir,
                   "directory for score histogram CSVs");
  AddCommonOptions(evwd, &common, false);

  SearchOptions se;
  CLI::App *search_cmds[2];
  const char *search_names[2] = {"eval-std", "eval-kws"};
  const char *search_help[2] = {
      "query-by-example spoken term detection equal error rates",
      "keyword spotting with written queries, equal error rates"};
  for (int i = 0; i < 2; ++i) {
    auto *s = app.add_subcommand(search_names[i], search_help[i]);
    s->add_option("--model", se.model, "model checkpoint (paths.checkpoint)");
    s->add_option("--corpus", se.corpus, "corpus directory (paths.corpus)");
    s->add_option("--windows", se.windows,
                  "window sizes in seconds (default 0.2 0.3 0.4 0.6)")
        ->delimiter(',');
    s->add_option("--out", se.out, "JSON report")->required();
    s->add_option("--histograms", se.histogram_dir,
                  "directory for score histogram CSVs");
    AddCommonOptions(s, &common, false);
    search_cmds[i] = s;
  }

  GradCheckOptions gc;
  auto *grad = app.add_subcommand("grad-check",
                                  "finite-difference gradient verification");
  grad->add_option("--seed", gc.seed, "first fixture seed")->capture_default_str();
  grad->add_option("--num-seeds", gc.num_seeds, "number of seeds")
      ->capture_default_str();

  SweepOptions sw;
  auto *sweep = app.add_subcommand("sweep-alpha", "train and evaluate a loss-weight grid");
  sweep->add_option("--corpus", sw.corpus, "corpus directory (paths.corpus)");
  sweep->add_option("--grid", sw.grid,
                    "a1:a2,... (default 1:0.1,1:0.5,1:1,0.1:1,0.5:0.1)");
  sweep->add_option("--out", sw.out, "CSV output")->required();
  sweep->add_option("--work-dir", sw.work_dir,
                    "checkpoint directory (default: sweep/ next to --out)");
  AddCommonOptions(sweep, &common, true);

  FeaturizeOptions fe;
  auto *feat = app.add_subcommand("featurize", "log-mel features of WAV files");
  feat->add_option("--wav", fe.wavs, "16 kHz mono PCM WAV files")->required();
  feat->add_option("--out-dir", fe.out_dir, "output directory")->required();
  AddCommonOptions(feat, &common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (gen->parsed()) return CmdGenSynth(common, gs);
    if (train->parsed()) return CmdTrain(common, tr);
    if (embed->parsed()) return CmdEmbed(common, em);
    if (evwd->parsed()) return CmdEvalWd(common, wd);
    if (search_cmds[0]->parsed()) return CmdSearch(common, se, true);
    if (search_cmds[1]->parsed()) return CmdSearch(common, se, false);
    if (grad->parsed()) return CmdGradCheck(gc);
    if (sweep->parsed()) return CmdSweepAlpha(common, sw);
    if (feat->parsed()) return CmdFeaturize(common, fe);
  } catch (const ConfigError &e) {
    std::cerr << "awe: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception &e) {
    std::cerr << "awe: error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfigError;
}

}  // namespace awe
