// encoders/param-store.cc

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

#include "encoders/param-store.h"

#include <cmath>
#include <sstream>

#include "base/binary-io.h"

namespace awe {

namespace {
constexpr char kCheckpointMagic[] = "AWEP";
}

Tensor::Tensor(std::vector<uint32_t> dims) : shape(std::move(dims)) {
  size_t n = 1;
  for (uint32_t d : shape) n *= d;
  data.assign(n, 0.0);
}

double &Tensor::Scalar() {
  AWE_CHECK(data.size() == 1, "tensor is not a scalar");
  return data[0];
}

double Tensor::Scalar() const {
  AWE_CHECK(data.size() == 1, "tensor is not a scalar");
  return data[0];
}

Tensor::MatrixMap Tensor::Matrix() {
  AWE_CHECK(shape.size() == 2, "tensor of rank ", shape.size(),
            " used as a matrix");
  return MatrixMap(data.data(), shape[0], shape[1]);
}

Tensor::ConstMatrixMap Tensor::Matrix() const {
  AWE_CHECK(shape.size() == 2, "tensor of rank ", shape.size(),
            " used as a matrix");
  return ConstMatrixMap(data.data(), shape[0], shape[1]);
}

Tensor &ParamStore::Add(const std::string &name, std::vector<uint32_t> shape) {
  auto [it, inserted] = entries_.emplace(name, Tensor(std::move(shape)));
  AWE_CHECK(inserted, "duplicate parameter name ", name);
  return it->second;
}

Tensor &ParamStore::Get(const std::string &name) {
  auto it = entries_.find(name);
  AWE_CHECK(it != entries_.end(), "no parameter named ", name);
  return it->second;
}

const Tensor &ParamStore::Get(const std::string &name) const {
  auto it = entries_.find(name);
  AWE_CHECK(it != entries_.end(), "no parameter named ", name);
  return it->second;
}

size_t ParamStore::NumElements() const {
  size_t n = 0;
  for (const auto &[name, t] : entries_) n += t.Size();
  return n;
}

ParamStore ParamStore::ZerosLike() const {
  ParamStore z;
  for (const auto &[name, t] : entries_) z.Add(name, t.shape);
  return z;
}

bool ParamStore::SameLayout(const ParamStore &other) const {
  if (entries_.size() != other.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  for (; a != entries_.end(); ++a, ++b)
    if (a->first != b->first || a->second.shape != b->second.shape) return false;
  return true;
}

void ParamStore::AddScaled(const ParamStore &other, double alpha) {
  AWE_CHECK(SameLayout(other), "parameter layout mismatch");
  auto b = other.entries_.begin();
  for (auto a = entries_.begin(); a != entries_.end(); ++a, ++b)
    a->second.Flat() += alpha * b->second.Flat();
}

void ParamStore::Scale(double alpha) {
  for (auto &[name, t] : entries_) t.Flat() *= alpha;
}

double ParamStore::SquaredNorm() const {
  double s = 0.0;
  for (const auto &[name, t] : entries_) s += t.Flat().squaredNorm();
  return s;
}

bool ParamStore::AllFinite() const {
  for (const auto &[name, t] : entries_)
    if (!t.Flat().allFinite()) return false;
  return true;
}

std::string EncodeParamStore(const ParamStore &params) {
  std::ostringstream os(std::ios::binary);
  WriteMagic(os, kCheckpointMagic);
  WriteU32(os, static_cast<uint32_t>(params.Count()));
  for (const auto &[name, t] : params) {
    WriteString(os, name);
    WriteU32(os, static_cast<uint32_t>(t.Rank()));
    for (uint32_t d : t.shape) WriteU32(os, d);
    WriteF64Array(os, t.data);
  }
  return os.str();
}

ParamStore DecodeParamStore(const std::string &bytes) {
  std::istringstream is(bytes, std::ios::binary);
  ExpectMagic(is, kCheckpointMagic);
  uint32_t count = ReadU32(is);
  ParamStore params;
  for (uint32_t e = 0; e < count; ++e) {
    std::string name = ReadString(is);
    uint32_t rank = ReadU32(is);
    if (rank > 8) AWE_ERR("checkpoint entry ", name, " has implausible rank ", rank);
    std::vector<uint32_t> dims(rank);
    uint64_t n = 1;
    for (auto &d : dims) {
      d = ReadU32(is);
      n *= d;
    }
    if (n * 8 > RemainingBytes(is))
      AWE_ERR("truncated checkpoint entry ", name);
    Tensor &t = params.Add(name, dims);
    ReadF64Array(is, t.data);
  }
  if (RemainingBytes(is) != 0) AWE_ERR("trailing bytes after checkpoint");
  return params;
}

void SaveParamStore(const ParamStore &params,
                    const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeParamStore(params));
}

ParamStore LoadParamStore(const std::filesystem::path &path) {
  try {
    return DecodeParamStore(ReadFileBytes(path));
  } catch (const Error &e) {
    AWE_ERR(path.string(), ": ", e.what());
  }
}

}  // namespace awe
