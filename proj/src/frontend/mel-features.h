// frontend/mel-features.h

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

#ifndef AWE_FRONTEND_MEL_FEATURES_H_
#define AWE_FRONTEND_MEL_FEATURES_H_

#include <vector>

#include "base/awe-common.h"
#include "frontend/feature-io.h"
#include "frontend/wave-reader.h"

namespace awe {

struct MelConfig {
  double win_ms = 25.0;
  double hop_ms = 10.0;
  int n_mels = 128;
  int fft_size = 1024;
  double log_floor = 1e-10;
  int sample_rate = kRequiredSampleRate;

  int WindowLength() const;  // samples
  int HopLength() const;     // samples
  /// Throws ConfigError on an invalid combination.
  void Validate() const;
};

double HzToMel(double hz);  // HTK: 2595 log10(1 + f/700)
double MelToHz(double mel);

/// Periodic Hann window of length n.
std::vector<double> HannWindow(int n);

/// n_mels x (fft_size/2 + 1) triangular filters, HTK mel scale, spanning
/// 0 Hz to Nyquist. Adjacent filters cross at each other's centers.
RowMatrixXd MelFilterbank(const MelConfig &cfg);

/// Center frequency (Hz) of filter m.
double MelFilterCenterHz(const MelConfig &cfg, int m);

/// Number of frames produced for `num_samples`: 1 + (len - win) / hop.
int NumFrames(int num_samples, const MelConfig &cfg);

/// Log-mel energies: Hann-windowed power spectrum, mel filterbank, natural
/// log of max(energy, log_floor). No pre-emphasis, no normalization.
FeatureSequence ComputeLogMel(const WaveForm &wave, const MelConfig &cfg);

}  // namespace awe

#endif  // AWE_FRONTEND_MEL_FEATURES_H_
