// eval/embedding-table.cc

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

#include "eval/embedding-table.h"

#include <cmath>
#include <span>
#include <sstream>

#include "base/binary-io.h"
#include "base/parallel.h"

namespace awe {

namespace {
constexpr char kEmbeddingMagic[] = "EMB1";
}

void EmbeddingTable::Add(const std::string &id,
                         const Eigen::Ref<const Eigen::VectorXf> &v) {
  if (dim_ == 0 && ids_.empty()) dim_ = static_cast<int>(v.size());
  AWE_CHECK(v.size() == dim_, "embedding for ", id, " has dimension ",
            v.size(), ", table has ", dim_);
  auto [it, inserted] = index_.emplace(id, ids_.size());
  AWE_CHECK(inserted, "duplicate embedding id ", id);
  ids_.push_back(id);
  data_.insert(data_.end(), v.data(), v.data() + v.size());
}

void EmbeddingTable::AddBatch(const std::vector<std::string> &ids,
                              const Eigen::MatrixXd &rows) {
  AWE_CHECK(static_cast<Eigen::Index>(ids.size()) == rows.rows(),
            "id count and embedding rows differ");
  for (size_t i = 0; i < ids.size(); ++i)
    Add(ids[i], rows.row(i).transpose().cast<float>());
}

size_t EmbeddingTable::IndexOf(const std::string &id) const {
  auto it = index_.find(id);
  if (it == index_.end()) AWE_ERR("missing embedding for id ", id);
  return it->second;
}

std::string EncodeEmbeddings(const EmbeddingTable &table) {
  std::ostringstream os(std::ios::binary);
  WriteMagic(os, kEmbeddingMagic);
  WriteU32(os, static_cast<uint32_t>(table.Size()));
  WriteU32(os, static_cast<uint32_t>(table.Dim()));
  for (size_t i = 0; i < table.Size(); ++i) {
    WriteString(os, table.Ids()[i]);
    auto row = table.Row(i);
    WriteF32Array(os, std::span<const float>(row.data(), row.size()));
  }
  return os.str();
}

EmbeddingTable DecodeEmbeddings(const std::string &bytes) {
  std::istringstream is(bytes, std::ios::binary);
  ExpectMagic(is, kEmbeddingMagic);
  uint32_t count = ReadU32(is);
  uint32_t dim = ReadU32(is);
  EmbeddingTable table(static_cast<int>(dim));
  Eigen::VectorXf v(dim);
  for (uint32_t r = 0; r < count; ++r) {
    std::string id = ReadString(is);
    ReadF32Array(is, std::span<float>(v.data(), dim));
    table.Add(id, v);
  }
  if (RemainingBytes(is) != 0) AWE_ERR("trailing bytes after embeddings");
  return table;
}

void WriteEmbeddings(const EmbeddingTable &table,
                     const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeEmbeddings(table));
}

EmbeddingTable ReadEmbeddings(const std::filesystem::path &path) {
  try {
    return DecodeEmbeddings(ReadFileBytes(path));
  } catch (const Error &e) {
    AWE_ERR(path.string(), ": ", e.what());
  }
}

Eigen::MatrixXd EmbedAudioParallel(const ParamStore &params,
                                   const EncoderConfig &cfg,
                                   const std::vector<FeatureSequence> &seqs,
                                   int num_threads) {
  Eigen::MatrixXd out(seqs.size(), cfg.embed_dim);
  ParallelFor(seqs.size(), num_threads, [&](size_t begin, size_t end) {
    std::span<const FeatureSequence> chunk(seqs.data() + begin, end - begin);
    out.middleRows(begin, end - begin) = EncodeAudio(params, cfg, chunk).vectors;
  });
  return out;
}

double CosineSimilarity(const Eigen::Ref<const Eigen::VectorXf> &a,
                        const Eigen::Ref<const Eigen::VectorXf> &b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    double x = a[k], y = b[k];
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

}  // namespace awe
