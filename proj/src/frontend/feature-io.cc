// frontend/feature-io.cc

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

#include "frontend/feature-io.h"

#include <sstream>

#include "base/binary-io.h"

namespace awe {

namespace {
constexpr char kFeatureMagic[] = "AWE1";
}

std::string EncodeFeatures(const FeatureSequence &seq) {
  AWE_CHECK(seq.frames.allFinite(), "refusing to write non-finite features");
  std::ostringstream os(std::ios::binary);
  WriteMagic(os, kFeatureMagic);
  WriteU32(os, static_cast<uint32_t>(seq.frames.rows()));
  WriteU32(os, static_cast<uint32_t>(seq.frames.cols()));
  WriteF32Array(os, {seq.frames.data(), static_cast<size_t>(seq.frames.size())});
  return os.str();
}

FeatureSequence DecodeFeatures(const std::string &bytes) {
  std::istringstream is(bytes, std::ios::binary);
  ExpectMagic(is, kFeatureMagic);
  uint32_t rows = ReadU32(is), cols = ReadU32(is);
  uint64_t expected = static_cast<uint64_t>(rows) * cols * 4;
  uint64_t payload = RemainingBytes(is);
  if (payload < expected) AWE_ERR("truncated feature file: header says ",
                                  rows, "x", cols, " but payload has ",
                                  payload, " bytes");
  if (payload > expected) AWE_ERR("feature file row/col mismatch: header says ",
                                  rows, "x", cols, " but payload has ",
                                  payload, " bytes");
  FeatureSequence seq;
  seq.frames.resize(rows, cols);
  ReadF32Array(is, {seq.frames.data(), static_cast<size_t>(seq.frames.size())});
  return seq;
}

void WriteFeatures(const FeatureSequence &seq,
                   const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeFeatures(seq));
}

FeatureSequence ReadFeatures(const std::filesystem::path &path) {
  try {
    return DecodeFeatures(ReadFileBytes(path));
  } catch (const Error &e) {
    AWE_ERR(path.string(), ": ", e.what());
  }
}

}  // namespace awe
