// encoders/param-store.h

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

#ifndef AWE_ENCODERS_PARAM_STORE_H_
#define AWE_ENCODERS_PARAM_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "base/awe-common.h"

namespace awe {

/// Dense float64 array of any rank; rank 0 is a scalar with one element.
struct Tensor {
  std::vector<uint32_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<uint32_t> dims);

  size_t Rank() const { return shape.size(); }
  size_t Size() const { return data.size(); }
  bool operator==(const Tensor &) const = default;

  double &Scalar();
  double Scalar() const;

  using MatrixMap = Eigen::Map<RowMatrixXd>;
  using ConstMatrixMap = Eigen::Map<const RowMatrixXd>;
  using VectorMap = Eigen::Map<Eigen::VectorXd>;
  using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;

  /// Rank-2 view; throws for other ranks.
  MatrixMap Matrix();
  ConstMatrixMap Matrix() const;
  /// Flat view over all elements.
  VectorMap Flat() { return VectorMap(data.data(), static_cast<Eigen::Index>(data.size())); }
  ConstVectorMap Flat() const {
    return ConstVectorMap(data.data(), static_cast<Eigen::Index>(data.size()));
  }
};

/// Named trainable arrays. Iteration is sorted by name.
class ParamStore {
 public:
  using Map = std::map<std::string, Tensor>;

  /// Adds a zero-filled entry; throws if the name exists.
  Tensor &Add(const std::string &name, std::vector<uint32_t> shape);
  Tensor &Get(const std::string &name);
  const Tensor &Get(const std::string &name) const;
  bool Has(const std::string &name) const { return entries_.count(name) != 0; }
  size_t Count() const { return entries_.size(); }
  size_t NumElements() const;

  Map::iterator begin() { return entries_.begin(); }
  Map::iterator end() { return entries_.end(); }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  /// Same names and shapes, all zeros.
  ParamStore ZerosLike() const;
  bool SameLayout(const ParamStore &other) const;
  /// this += alpha * other; layouts must match.
  void AddScaled(const ParamStore &other, double alpha);
  void Scale(double alpha);
  /// Sum of squares over every element.
  double SquaredNorm() const;
  bool AllFinite() const;

  bool operator==(const ParamStore &) const = default;

 private:
  Map entries_;
};

inline constexpr char kLogTemperatureName[] = "log_temperature";

// Checkpoint layout (little-endian):
//   "AWEP"  u32 entry count, then per entry
//   u32 name length, UTF-8 name, u32 rank, rank x u32 dims, float64 payload.
std::string EncodeParamStore(const ParamStore &params);
ParamStore DecodeParamStore(const std::string &bytes);
void SaveParamStore(const ParamStore &params, const std::filesystem::path &path);
ParamStore LoadParamStore(const std::filesystem::path &path);

}  // namespace awe

#endif  // AWE_ENCODERS_PARAM_STORE_H_
