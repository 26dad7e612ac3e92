// eval/embedding-table.h

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

#ifndef AWE_EVAL_EMBEDDING_TABLE_H_
#define AWE_EVAL_EMBEDDING_TABLE_H_

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "encoders/encoder.h"

namespace awe {

/// Prefix of the ids under which written-word (text) embeddings are stored.
inline constexpr char kTextIdPrefix[] = "text:";

/// Id-addressed float32 embeddings, in insertion order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(int dim) : dim_(dim) {}

  void Add(const std::string &id, const Eigen::Ref<const Eigen::VectorXf> &v);
  /// Adds every row of `batch` under the parallel `ids`.
  void AddBatch(const std::vector<std::string> &ids, const Eigen::MatrixXd &rows);

  int Dim() const { return dim_; }
  size_t Size() const { return ids_.size(); }
  const std::vector<std::string> &Ids() const { return ids_; }
  bool Has(const std::string &id) const { return index_.count(id) != 0; }
  /// Row index of `id`; throws "missing embedding for id".
  size_t IndexOf(const std::string &id) const;
  Eigen::Map<const Eigen::VectorXf> Row(size_t i) const {
    return Eigen::Map<const Eigen::VectorXf>(data_.data() + i * dim_, dim_);
  }

  bool operator==(const EmbeddingTable &o) const {
    return dim_ == o.dim_ && ids_ == o.ids_ && data_ == o.data_;
  }

 private:
  int dim_ = 0;
  std::vector<std::string> ids_;
  std::vector<float> data_;
  std::unordered_map<std::string, size_t> index_;
};

// Embedding dump layout (little-endian):
//   "EMB1"  u32 count  u32 dim, then per record
//   u32 id length, UTF-8 id, dim float32.
std::string EncodeEmbeddings(const EmbeddingTable &table);
EmbeddingTable DecodeEmbeddings(const std::string &bytes);
void WriteEmbeddings(const EmbeddingTable &table,
                     const std::filesystem::path &path);
EmbeddingTable ReadEmbeddings(const std::filesystem::path &path);

/// Audio embeddings of many sequences, split into contiguous chunks across
/// up to `num_threads` workers. Output row i belongs to seqs[i] regardless of
/// the worker count.
Eigen::MatrixXd EmbedAudioParallel(const ParamStore &params,
                                   const EncoderConfig &cfg,
                                   const std::vector<FeatureSequence> &seqs,
                                   int num_threads);

/// Cosine similarity accumulated in double precision.
double CosineSimilarity(const Eigen::Ref<const Eigen::VectorXf> &a,
                        const Eigen::Ref<const Eigen::VectorXf> &b);

}  // namespace awe

#endif  // AWE_EVAL_EMBEDDING_TABLE_H_
