// frontend/wave-reader.h

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

#ifndef AWE_FRONTEND_WAVE_READER_H_
#define AWE_FRONTEND_WAVE_READER_H_

#include <filesystem>
#include <string>
#include <vector>

namespace awe {

inline constexpr int kRequiredSampleRate = 16000;

struct WaveForm {
  std::vector<double> samples;  // in [-1, 1)
  int sample_rate = kRequiredSampleRate;
};

/// Parses a RIFF/WAVE image. Only 16-bit PCM mono at 16 kHz is accepted;
/// samples are scaled by 1/32768.
WaveForm ParseWave(const std::string &bytes);
WaveForm ReadWave(const std::filesystem::path &path);

/// Serializes samples as 16-bit PCM mono (clipped to the int16 range).
std::string EncodeWave(const WaveForm &wave);

}  // namespace awe

#endif  // AWE_FRONTEND_WAVE_READER_H_
