// frontend/mel-features.cc

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

#include "frontend/mel-features.h"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

namespace awe {

namespace {

// The FFTW planner is not re-entrant; execution on a plan is.
std::mutex &PlannerMutex() {
  static std::mutex mu;
  return mu;
}

class RealFft {
 public:
  explicit RealFft(int n) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan_ = fftw_plan_dft_r2c_1d(n, in_, out_, FFTW_ESTIMATE);
  }
  ~RealFft() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  double *input() { return in_; }

  // Writes |X_k|^2 for k = 0 .. n/2.
  void PowerSpectrum(Eigen::VectorXd *power) {
    fftw_execute(plan_);
    power->resize(n_ / 2 + 1);
    for (int k = 0; k <= n_ / 2; ++k)
      (*power)(k) = out_[k][0] * out_[k][0] + out_[k][1] * out_[k][1];
  }

 private:
  int n_;
  double *in_;
  fftw_complex *out_;
  fftw_plan plan_;
};

}  // namespace

int MelConfig::WindowLength() const {
  return static_cast<int>(std::lround(win_ms * sample_rate / 1000.0));
}

int MelConfig::HopLength() const {
  return static_cast<int>(std::lround(hop_ms * sample_rate / 1000.0));
}

void MelConfig::Validate() const {
  if (sample_rate != kRequiredSampleRate)
    throw ConfigError("mel.sample_rate must be 16000");
  if (n_mels < 1) throw ConfigError("mel.n_mels must be >= 1");
  if (fft_size <= 0) throw ConfigError("mel.fft_size must be positive");
  if (WindowLength() < 1 || HopLength() < 1)
    throw ConfigError("mel.win_ms and mel.hop_ms must be positive");
  if (WindowLength() > fft_size)
    throw ConfigError(internal::StrCat("mel window of ", WindowLength(),
                                       " samples exceeds fft_size ",
                                       fft_size));
  if (!(log_floor > 0)) throw ConfigError("mel.log_floor must be positive");
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> HannWindow(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  return w;
}

double MelFilterCenterHz(const MelConfig &cfg, int m) {
  double top = HzToMel(cfg.sample_rate / 2.0);
  return MelToHz(top * (m + 1) / (cfg.n_mels + 1));
}

RowMatrixXd MelFilterbank(const MelConfig &cfg) {
  cfg.Validate();
  int num_bins = cfg.fft_size / 2 + 1;
  double top = HzToMel(cfg.sample_rate / 2.0);
  std::vector<double> edges(cfg.n_mels + 2);
  for (int i = 0; i < cfg.n_mels + 2; ++i)
    edges[i] = MelToHz(top * i / (cfg.n_mels + 1));

  RowMatrixXd fb = RowMatrixXd::Zero(cfg.n_mels, num_bins);
  for (int m = 0; m < cfg.n_mels; ++m) {
    double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (int k = 0; k < num_bins; ++k) {
      double f = static_cast<double>(k) * cfg.sample_rate / cfg.fft_size;
      double up = (f - left) / (center - left);
      double down = (right - f) / (right - center);
      fb(m, k) = std::max(0.0, std::min(up, down));
    }
  }
  return fb;
}

int NumFrames(int num_samples, const MelConfig &cfg) {
  int win = cfg.WindowLength(), hop = cfg.HopLength();
  if (num_samples < win) return 0;
  return 1 + (num_samples - win) / hop;
}

FeatureSequence ComputeLogMel(const WaveForm &wave, const MelConfig &cfg) {
  cfg.Validate();
  if (wave.sample_rate != cfg.sample_rate)
    AWE_ERR("sample rate ", wave.sample_rate, " does not match config ",
            cfg.sample_rate);
  int win = cfg.WindowLength(), hop = cfg.HopLength();
  int num_samples = static_cast<int>(wave.samples.size());
  if (num_samples < win)
    AWE_ERR("wave of ", num_samples, " samples is shorter than one window (",
            win, " samples)");

  int num_frames = NumFrames(num_samples, cfg);
  RowMatrixXd fb = MelFilterbank(cfg);
  std::vector<double> window = HannWindow(win);
  RealFft fft(cfg.fft_size);
  double *in = fft.input();
  Eigen::VectorXd power;
  FeatureSequence out;
  out.frames.resize(num_frames, cfg.n_mels);
  for (int t = 0; t < num_frames; ++t) {
    const double *frame = wave.samples.data() + static_cast<size_t>(t) * hop;
    for (int i = 0; i < win; ++i) in[i] = frame[i] * window[i];
    for (int i = win; i < cfg.fft_size; ++i) in[i] = 0.0;
    fft.PowerSpectrum(&power);
    Eigen::VectorXd mel = fb * power;
    for (int m = 0; m < cfg.n_mels; ++m)
      out.frames(t, m) =
          static_cast<float>(std::log(std::max(mel(m), cfg.log_floor)));
  }
  return out;
}

}  // namespace awe
