// frontend/feature-io.h

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

#ifndef AWE_FRONTEND_FEATURE_IO_H_
#define AWE_FRONTEND_FEATURE_IO_H_

#include <filesystem>
#include <string>

#include "base/awe-common.h"

namespace awe {

/// A T x F matrix of log-mel energies (or synthetic stand-ins), one row per
/// 10 ms frame.
struct FeatureSequence {
  RowMatrixXf frames;

  int NumFrames() const { return static_cast<int>(frames.rows()); }
  int Dim() const { return static_cast<int>(frames.cols()); }
  bool operator==(const FeatureSequence &o) const {
    return frames.rows() == o.frames.rows() &&
           frames.cols() == o.frames.cols() && frames == o.frames;
  }
};

// Feature file layout (little-endian):
//   "AWE1"  u32 T  u32 F  T*F float32, row-major.
std::string EncodeFeatures(const FeatureSequence &seq);
FeatureSequence DecodeFeatures(const std::string &bytes);

void WriteFeatures(const FeatureSequence &seq,
                   const std::filesystem::path &path);
FeatureSequence ReadFeatures(const std::filesystem::path &path);

}  // namespace awe

#endif  // AWE_FRONTEND_FEATURE_IO_H_
