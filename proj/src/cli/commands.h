// cli/commands.h

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


#ifndef AWE_CLI_COMMANDS_H_
#define AWE_CLI_COMMANDS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "cli/run-config.h"
#include "encoders/param-store.h"
#include "eval/embedding-table.h"
#include "frontend/manifest.h"

namespace awe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the `awe` tool; returns the process exit code.
int RunCli(int argc, char **argv);

/// The encoder configuration with the feature dimension taken from `feat_dim`
/// and the phoneme inventory sized to cover every lexicon entry.
EncoderConfig ResolveEncoderConfig(const EncoderConfig &base, int feat_dim,
                                   const Lexicon &lexicon);

/// Audio embeddings of `records` under their ids and, when `lexicon` is
/// non-null, one "text:<word>" entry per distinct word of the records.
EmbeddingTable EmbedRecords(const ParamStore &params,
                            const std::vector<ManifestRecord> &records,
                            const std::vector<FeatureSequence> &features,
                            const Lexicon *lexicon, int num_threads);

struct AlphaSetting {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// The five loss-weight settings of the sweep, in report order.
std::vector<AlphaSetting> DefaultAlphaGrid();

/// "a1:a2,a1:a2,..."
std::vector<AlphaSetting> ParseAlphaGrid(const std::string &text);

struct SweepRow {
  AlphaSetting alpha;
  double ap_iv = 0.0;
  double ap_oov = 0.0;
  double ap_cross_iv = 0.0;
  double ap_cross_oov = 0.0;
};

inline constexpr char kSweepHeader[] =
    "alpha1,alpha2,ap_iv,ap_oov,ap_cross_iv,ap_cross_oov";
std::string FormatSweepCsv(const std::vector<SweepRow> &rows);

/// Trains one model per grid setting on the corpus in `corpus_dir`, writing
/// each under `work_dir`/alpha_<a1>_<a2>, and evaluates word discrimination
/// on the test split.
std::vector<SweepRow> SweepAlpha(const RunConfig &cfg,
                                 const std::filesystem::path &corpus_dir,
                                 const std::vector<AlphaSetting> &grid,
                                 const std::filesystem::path &work_dir);

}  // namespace awe

#endif  // AWE_CLI_COMMANDS_H_
