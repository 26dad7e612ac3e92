// unit/frontend-test.cc

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


#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>

#include <gtest/gtest.h>

#include "base/binary-io.h"
#include "frontend/feature-io.h"
#include "frontend/manifest.h"
#include "frontend/mel-features.h"
#include "frontend/wave-reader.h"
#include "unit/test-util.h"

namespace awe {
namespace {

using testing::RandomInt;
using testing::ScratchDir;

void PutU32(std::string *s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutU16(std::string *s, uint16_t v) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>(v >> 8));
}

// A RIFF image assembled byte by byte, independent of EncodeWave.
std::string WaveBytes(const std::vector<int16_t> &pcm, uint16_t channels = 1,
                      uint32_t rate = 16000, uint16_t bits = 16,
                      uint16_t format = 1) {
  std::string fmt, out;
  PutU16(&fmt, format);
  PutU16(&fmt, channels);
  PutU32(&fmt, rate);
  PutU32(&fmt, rate * channels * bits / 8);
  PutU16(&fmt, channels * bits / 8);
  PutU16(&fmt, bits);
  std::string data;
  for (int16_t v : pcm) PutU16(&data, static_cast<uint16_t>(v));
  out = "RIFF";
  PutU32(&out, static_cast<uint32_t>(4 + 8 + fmt.size() + 8 + data.size()));
  out += "WAVEfmt ";
  PutU32(&out, static_cast<uint32_t>(fmt.size()));
  out += fmt + "data";
  PutU32(&out, static_cast<uint32_t>(data.size()));
  return out + data;
}

void ExpectThrowsWith(const std::function<void()> &fn, const std::string &text) {
  try {
    fn();
    FAIL() << "expected an error containing \"" << text << "\"";
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find(text), std::string::npos) << e.what();
  }
}

TEST(WaveReaderTest, ScalesSixteenBitSamples) {
  WaveForm w = ParseWave(WaveBytes({16384, -32768, 0, 32767}));
  ASSERT_EQ(w.samples.size(), 4u);
  EXPECT_EQ(w.samples[0], 0.5);
  EXPECT_EQ(w.samples[1], -1.0);
  EXPECT_EQ(w.samples[2], 0.0);
  EXPECT_EQ(w.samples[3], 32767.0 / 32768.0);
  EXPECT_EQ(w.sample_rate, 16000);
}

TEST(WaveReaderTest, OneSecondHasSixteenThousandSamples) {
  WaveForm w = ParseWave(WaveBytes(std::vector<int16_t>(16000, 7)));
  EXPECT_EQ(w.samples.size(), 16000u);
}

TEST(WaveReaderTest, RejectsBadInput) {
  ExpectThrowsWith([] { ParseWave(WaveBytes({})); }, "empty audio");
  ExpectThrowsWith([] { ParseWave(WaveBytes({1, 2}, 2)); }, "non-mono");
  ExpectThrowsWith([] { ParseWave(WaveBytes({1}, 1, 16000, 16, 3)); },
                   "unsupported encoding");
  ExpectThrowsWith([] { ParseWave(WaveBytes({1}, 1, 16000, 8)); },
                   "unsupported encoding");
  ExpectThrowsWith([] { ParseWave(WaveBytes({1}, 1, 8000)); }, "sample rate");
  ExpectThrowsWith([] { ParseWave("RIFX0000WAVE"); }, "malformed wave header");
}

TEST(WaveReaderTest, EncodeParseRoundTrip) {
  std::mt19937_64 rng(3);
  WaveForm w;
  for (int i = 0; i < 500; ++i)
    w.samples.push_back(RandomInt(&rng, -32768, 32767) / 32768.0);
  EXPECT_EQ(ParseWave(EncodeWave(w)).samples, w.samples);
}

TEST(MelFeaturesTest, OneSecondGivesNinetyEightFrames) {
  MelConfig cfg;
  WaveForm w;
  w.samples.assign(16000, 0.1);
  EXPECT_EQ(NumFrames(16000, cfg), 98);
  EXPECT_EQ(ComputeLogMel(w, cfg).NumFrames(), 98);
  EXPECT_EQ(ComputeLogMel(w, cfg).Dim(), 128);
}

TEST(MelFeaturesTest, FrameCountFormulaProperty) {
  MelConfig cfg;
  std::mt19937_64 rng(11);
  for (int s = 0; s < testing::kPropertySeeds; ++s) {
    int len = RandomInt(&rng, 400, 4000);
    WaveForm w;
    w.samples.assign(len, 0.0);
    EXPECT_EQ(ComputeLogMel(w, cfg).NumFrames(), 1 + (len - 400) / 160) << len;
  }
}

TEST(MelFeaturesTest, ShorterThanOneWindowFails) {
  WaveForm w;
  w.samples.assign(399, 0.0);
  ExpectThrowsWith([&] { ComputeLogMel(w, MelConfig()); }, "shorter than one window");
}

TEST(MelFeaturesTest, SilenceGivesLogFloor) {
  MelConfig cfg;
  WaveForm w;
  w.samples.assign(1200, 0.0);
  FeatureSequence f = ComputeLogMel(w, cfg);
  const float expected = static_cast<float>(std::log(cfg.log_floor));
  for (int t = 0; t < f.NumFrames(); ++t)
    for (int m = 0; m < f.Dim(); ++m) EXPECT_EQ(f.frames(t, m), expected);
}

// Triangular HTK filters evaluated directly from the mel formula.
double OracleFilter(const MelConfig &cfg, int m, double hz) {
  auto mel = [](double f) { return 2595.0 * std::log10(1.0 + f / 700.0); };
  auto inv = [](double x) { return 700.0 * (std::pow(10.0, x / 2595.0) - 1.0); };
  double top = mel(cfg.sample_rate / 2.0);
  double l = inv(top * m / (cfg.n_mels + 1));
  double c = inv(top * (m + 1) / (cfg.n_mels + 1));
  double r = inv(top * (m + 2) / (cfg.n_mels + 1));
  if (hz <= l || hz >= r) return 0.0;
  return hz <= c ? (hz - l) / (c - l) : (r - hz) / (r - c);
}

TEST(MelFeaturesTest, FilterbankMatchesOracleAndRowsArePositive) {
  MelConfig cfg;
  RowMatrixXd fb = MelFilterbank(cfg);
  ASSERT_EQ(fb.rows(), 128);
  ASSERT_EQ(fb.cols(), cfg.fft_size / 2 + 1);
  for (int m = 0; m < fb.rows(); ++m) {
    EXPECT_GT(fb.row(m).sum(), 0.0) << "filter " << m;
    for (int k = 0; k < fb.cols(); ++k)
      EXPECT_NEAR(fb(m, k), OracleFilter(cfg, m, k * 16000.0 / cfg.fft_size), 1e-12);
  }
}

TEST(MelFeaturesTest, AdjacentFiltersCrossAtCenters) {
  MelConfig cfg;
  for (int m = 0; m + 1 < cfg.n_mels; ++m) {
    double c0 = MelFilterCenterHz(cfg, m), c1 = MelFilterCenterHz(cfg, m + 1);
    EXPECT_NEAR(OracleFilter(cfg, m + 1, c0), 0.0, 1e-12);
    EXPECT_NEAR(OracleFilter(cfg, m, c1), 0.0, 1e-12);
    EXPECT_NEAR(OracleFilter(cfg, m, c0), 1.0, 1e-9);
  }
}

// Log-mel energies of one frame from a direct O(n^2) DFT.
std::vector<double> OracleLogMel(const std::vector<double> &x, int start,
                                 const MelConfig &cfg) {
  const int win = 400, n = cfg.fft_size;
  std::vector<double> power(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < win; ++i) {
      double hann = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / win);
      acc += x[start + i] * hann *
             std::polar(1.0, -2.0 * std::numbers::pi * k * i / n);
    }
    power[k] = std::norm(acc);
  }
  std::vector<double> out(cfg.n_mels);
  for (int m = 0; m < cfg.n_mels; ++m) {
    double e = 0.0;
    for (int k = 0; k <= n / 2; ++k)
      e += OracleFilter(cfg, m, k * 16000.0 / n) * power[k];
    out[m] = std::log(std::max(e, cfg.log_floor));
  }
  return out;
}

TEST(MelFeaturesTest, MatchesDirectDftOracle) {
  MelConfig cfg;
  cfg.n_mels = 40;
  std::mt19937_64 rng(5);
  WaveForm w;
  std::normal_distribution<double> g(0.0, 0.1);
  for (int i = 0; i < 400 + 160 * 2; ++i) w.samples.push_back(g(rng));
  FeatureSequence f = ComputeLogMel(w, cfg);
  ASSERT_EQ(f.NumFrames(), 3);
  for (int t = 0; t < 3; ++t) {
    auto oracle = OracleLogMel(w.samples, t * 160, cfg);
    for (int m = 0; m < cfg.n_mels; ++m)
      EXPECT_NEAR(f.frames(t, m), oracle[m], 1e-4) << t << "," << m;
  }
}

TEST(MelFeaturesTest, SineAtFilterCenterPeaksInThatFilter) {
  MelConfig cfg;
  for (int target : {20, 60, 100}) {
    double hz = MelFilterCenterHz(cfg, target);
    WaveForm w;
    for (int i = 0; i < 4000; ++i)
      w.samples.push_back(0.5 * std::sin(2.0 * std::numbers::pi * hz * i / 16000.0));
    FeatureSequence f = ComputeLogMel(w, cfg);
    auto oracle = OracleLogMel(w.samples, 0, cfg);
    int oracle_arg = static_cast<int>(
        std::max_element(oracle.begin(), oracle.end()) - oracle.begin());
    EXPECT_EQ(oracle_arg, target);
    for (int t = 0; t < f.NumFrames(); ++t) {
      Eigen::Index arg;
      f.frames.row(t).maxCoeff(&arg);
      EXPECT_EQ(arg, target) << "frame " << t;
    }
  }
}

TEST(MelFeaturesTest, Deterministic) {
  std::mt19937_64 rng(9);
  WaveForm w;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 3000; ++i) w.samples.push_back(u(rng));
  EXPECT_EQ(ComputeLogMel(w, MelConfig()), ComputeLogMel(w, MelConfig()));
}

TEST(MelFeaturesTest, ConfigValidation) {
  MelConfig cfg;
  cfg.fft_size = 256;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = MelConfig();
  cfg.n_mels = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = MelConfig();
  cfg.log_floor = 0.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

ManifestRecord Rec(const std::string &id, double start, double end) {
  ManifestRecord r;
  r.id = id;
  r.word = "w";
  r.feature_path = id + ".feat";
  r.start_s = start;
  r.end_s = end;
  r.speaker = "s";
  return r;
}

TEST(ManifestTest, DurationFilterBoundaries) {
  std::vector<ManifestRecord> in = {Rec("a", 1.0, 1.3), Rec("b", 0.0, 0.5),
                                    Rec("c", 2.0, 3.2), Rec("d", 0.0, 2.0),
                                    Rec("e", 0.0, 2.01)};
  auto out = DurationFilter(in);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].id, "b");
  EXPECT_EQ(out[1].id, "c");
  EXPECT_EQ(out[2].id, "d");
}

TEST(ManifestTest, JsonlRoundTrip) {
  std::vector<ManifestRecord> in = {Rec("a", 0.0, 0.75), Rec("b", 1.25, 2.0)};
  in[1].split = Split::kTest;
  in[1].word = "caf\xc3\xa9";
  EXPECT_EQ(ManifestFromJsonl(ManifestToJsonl(in)), in);
}

TEST(ManifestTest, RejectsBadRecords) {
  ExpectThrowsWith([] { ManifestFromJsonl(ManifestToJsonl({Rec("a", 1.0, 1.0)})); },
                   "end_s must exceed start_s");
  ExpectThrowsWith(
      [] { ManifestFromJsonl(ManifestToJsonl({Rec("a", 0, 1), Rec("a", 0, 1)})); },
      "duplicate record id");
  ExpectThrowsWith([] { ManifestFromJsonl("{\"id\": \"x\", \"bogus\": 1}\n"); },
                   "unknown manifest field");
}

TEST(ManifestTest, LexiconAndSearchRoundTrip) {
  ScratchDir dir("manifest");
  Lexicon lex = {{"alpha", {0, 1, 2}}, {"beta", {3, 3, 0}}};
  WriteLexicon(lex, dir / "lexicon.txt");
  EXPECT_EQ(ReadLexicon(dir / "lexicon.txt"), lex);
  SearchUtterance u;
  u.id = "u1";
  u.feature_path = "features/u1.feat";
  u.speaker = "s1";
  u.words = {{"alpha", 0.1, 0.8}, {"beta", 0.9, 1.7}};
  WriteSearchManifest({u}, dir / "search.jsonl");
  auto back = ReadSearchManifest(dir / "search.jsonl");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], u);
}

TEST(FeatureIoTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(21);
  ScratchDir dir("features");
  for (int s = 0; s < 10; ++s) {
    FeatureSequence f;
    f.frames = testing::RandomGaussian(&rng, RandomInt(&rng, 1, 40),
                                       RandomInt(&rng, 1, 30))
                   .cast<float>();
    f.frames(0, 0) = -0.0f;
    WriteFeatures(f, dir / "x.feat");
    FeatureSequence back = ReadFeatures(dir / "x.feat");
    ASSERT_EQ(back.frames.rows(), f.frames.rows());
    ASSERT_EQ(back.frames.cols(), f.frames.cols());
    EXPECT_EQ(std::memcmp(back.frames.data(), f.frames.data(),
                          sizeof(float) * f.frames.size()),
              0);
  }
}

TEST(FeatureIoTest, LayoutIsMagicRowsColsPayload) {
  FeatureSequence f;
  f.frames.resize(2, 3);
  f.frames << 1, 2, 3, 4, 5, 6;
  std::string b = EncodeFeatures(f);
  ASSERT_EQ(b.size(), 4u + 8u + 24u);
  EXPECT_EQ(b.substr(0, 4), "AWE1");
  EXPECT_EQ(static_cast<unsigned char>(b[4]), 2);
  EXPECT_EQ(static_cast<unsigned char>(b[8]), 3);
  float v;
  std::memcpy(&v, b.data() + 12 + 4, 4);
  EXPECT_EQ(v, 2.0f);
}

TEST(FeatureIoTest, RejectsCorruptFiles) {
  FeatureSequence f;
  f.frames = RowMatrixXf::Ones(2, 3);
  std::string b = EncodeFeatures(f);
  std::string bad = b;
  bad.replace(0, 4, "XXXX");
  ExpectThrowsWith([&] { DecodeFeatures(bad); }, "bad magic");
  ExpectThrowsWith([&] { DecodeFeatures(b.substr(0, b.size() - 4)); }, "truncated");
  ExpectThrowsWith([&] { DecodeFeatures(b + "abcd"); }, "mismatch");
}

}  // namespace
}  // namespace awe
