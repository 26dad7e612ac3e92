// unit/eval-test.cc

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


#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <gtest/gtest.h>

#include "encoders/encoder.h"
#include "eval/embedding-table.h"
#include "eval/metrics.h"
#include "eval/report.h"
#include "eval/trials.h"
#include "eval/windowed-search.h"
#include "synth/synth-corpus.h"
#include "unit/test-util.h"

namespace awe {
namespace {

std::vector<LabeledScore> Make(std::vector<std::pair<double, bool>> v) {
  std::vector<LabeledScore> out;
  for (auto [s, p] : v) out.push_back({s, p});
  return out;
}

// ----- Brute-force threshold oracles ----------------------------------------

std::vector<double> DistinctDescending(const std::vector<LabeledScore> &t) {
  std::set<double, std::greater<double>> s;
  for (const auto &x : t) s.insert(x.score);
  return {s.begin(), s.end()};
}

double OracleAp(const std::vector<LabeledScore> &t) {
  double total_pos = 0;
  for (const auto &x : t) total_pos += x.positive;
  double ap = 0.0, prev_recall = 0.0;
  for (double th : DistinctDescending(t)) {
    double acc = 0, tp = 0;
    for (const auto &x : t)
      if (x.score >= th) ++acc, tp += x.positive;
    double recall = tp / total_pos;
    ap += (tp / acc) * (recall - prev_recall);
    prev_recall = recall;
  }
  return ap;
}

double OracleEer(const std::vector<LabeledScore> &t) {
  std::vector<double> th = DistinctDescending(t);
  std::reverse(th.begin(), th.end());
  th.push_back(std::numeric_limits<double>::infinity());
  double np = 0, nn = 0;
  for (const auto &x : t) (x.positive ? np : nn) += 1;
  std::vector<double> far, frr;
  for (double h : th) {
    double fa = 0, fr = 0;
    for (const auto &x : t) {
      if (!x.positive && x.score >= h) ++fa;
      if (x.positive && x.score < h) ++fr;
    }
    far.push_back(fa / nn);
    frr.push_back(fr / np);
  }
  for (size_t k = 0; k < th.size(); ++k) {
    double d = far[k] - frr[k];
    if (d > 0) continue;
    if (d == 0 || k == 0) return far[k];
    double d0 = far[k - 1] - frr[k - 1];
    return far[k - 1] + d0 / (d0 - d) * (far[k] - far[k - 1]);
  }
  return far.back();
}

std::vector<LabeledScore> RandomTrials(std::mt19937_64 *rng, bool ties) {
  int n = testing::RandomInt(rng, 2, 1000);
  std::vector<LabeledScore> t(n);
  for (auto &x : t) {
    x.positive = testing::RandomReal(rng, 0, 1) < 0.3;
    x.score = ties ? testing::RandomInt(rng, 0, 9) / 10.0
                   : testing::RandomReal(rng, -1, 1) + (x.positive ? 0.4 : 0.0);
  }
  t[0].positive = true;
  t[1].positive = false;
  return t;
}

// ----- AP and EER -----------------------------------------------------------

TEST(AveragePrecisionTest, Examples) {
  EXPECT_NEAR(AveragePrecision(Make({{0.9, true}, {0.8, false}, {0.7, true}})),
              0.833333, 1e-6);
  EXPECT_NEAR(AveragePrecision(Make({{0.9, true}, {0.8, false}, {0.7, true}})),
              (1.0 + 2.0 / 3.0) / 2.0, 1e-12);
  EXPECT_EQ(AveragePrecision(Make({{0.9, true}, {0.8, true}, {0.1, false}})), 1.0);
  EXPECT_NEAR(AveragePrecision(Make({{0.2, true}, {0.8, false}})), 0.5, 1e-12);
  EXPECT_NEAR(AveragePrecision(Make({{0.5, true}, {0.5, false}})), 0.5, 1e-12);
  EXPECT_THROW(AveragePrecision(Make({{0.5, false}})), Error);
}

TEST(EqualErrorRateTest, Examples) {
  EXPECT_EQ(EqualErrorRate(Make({{0.9, true}, {0.8, true}, {0.1, false}})), 0.0);
  EXPECT_NEAR(EqualErrorRate(Make({{0.3, true}, {0.7, true}, {0.3, false}, {0.7, false}})),
              0.5, 1e-12);
  EXPECT_NEAR(EqualErrorRate(Make({{0.9, true}, {0.4, true}, {0.6, false}, {0.1, false}})),
              0.5, 1e-12);
  EXPECT_THROW(EqualErrorRate(Make({{0.5, true}})), Error);
  EXPECT_THROW(EqualErrorRate(Make({{0.5, false}})), Error);
}

TEST(MetricOracleTest, MatchesBruteForceExactly) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 2 * testing::kPropertySeeds; ++k) {
    auto t = RandomTrials(&rng, k % 2 == 0);
    EXPECT_NEAR(AveragePrecision(t), OracleAp(t), 1e-12);
    EXPECT_DOUBLE_EQ(EqualErrorRate(t), OracleEer(t));
  }
}

TEST(MetricOracleTest, DegenerateCases) {
  auto all_tied = Make({{0.4, true}, {0.4, false}, {0.4, false}, {0.4, true}});
  EXPECT_DOUBLE_EQ(AveragePrecision(all_tied), OracleAp(all_tied));
  EXPECT_DOUBLE_EQ(EqualErrorRate(all_tied), OracleEer(all_tied));
  auto inverted = Make({{0.1, true}, {0.2, true}, {0.8, false}, {0.9, false}});
  EXPECT_DOUBLE_EQ(AveragePrecision(inverted), OracleAp(inverted));
  EXPECT_DOUBLE_EQ(EqualErrorRate(inverted), OracleEer(inverted));
  EXPECT_EQ(EqualErrorRate(inverted), 1.0);
}

TEST(MetricPropertyTest, MonotoneTransformInvariance) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    auto t = RandomTrials(&rng, k % 3 == 0);
    auto u = t;
    for (auto &x : u) x.score = std::exp(3.0 * x.score) - 7.0;
    EXPECT_DOUBLE_EQ(AveragePrecision(t), AveragePrecision(u));
    EXPECT_DOUBLE_EQ(EqualErrorRate(t), EqualErrorRate(u));
  }
}

TEST(MetricPropertyTest, ApIsOneIffStrictlySeparated) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    auto t = RandomTrials(&rng, true);
    double min_pos = 1e9, max_neg = -1e9;
    for (const auto &x : t)
      x.positive ? min_pos = std::min(min_pos, x.score) : max_neg = std::max(max_neg, x.score);
    EXPECT_EQ(AveragePrecision(t) == 1.0, min_pos > max_neg);
  }
}

TEST(MetricPropertyTest, EerInUnitInterval) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    auto t = RandomTrials(&rng, k % 2 == 0);
    double e = EqualErrorRate(t);
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 1.0);
  }
}

TEST(HistogramTest, BinsAndStats) {
  auto top = ComputeHistogram(Make({{1.0, true}, {1.0, true}, {1.0, false}}));
  for (int b = 0; b < ScoreHistogram::kBins; ++b) {
    EXPECT_EQ(top.positive[b], b == ScoreHistogram::kBins - 1 ? 2u : 0u);
    EXPECT_EQ(top.negative[b], b == ScoreHistogram::kBins - 1 ? 1u : 0u);
  }
  EXPECT_EQ(ScoreHistogram::BinOf(-1.0), 0);
  EXPECT_EQ(ScoreHistogram::BinOf(-5.0), 0);
  EXPECT_EQ(ScoreHistogram::BinOf(0.0), 25);
  std::mt19937_64 rng(5);
  auto t = RandomTrials(&rng, false);
  ScoreHistogram h = ComputeHistogram(t);
  uint64_t np = 0, nn = 0;
  double sum = 0, sq = 0;
  for (const auto &x : t) {
    (x.positive ? np : nn)++;
    if (x.positive) sum += x.score, sq += x.score * x.score;
  }
  uint64_t cp = 0, cn = 0;
  for (int b = 0; b < ScoreHistogram::kBins; ++b) cp += h.positive[b], cn += h.negative[b];
  EXPECT_EQ(cp, np);
  EXPECT_EQ(cn, nn);
  double mean = sum / np;
  EXPECT_NEAR(h.positive_stats.mean, mean, 1e-12);
  EXPECT_NEAR(h.positive_stats.stddev, std::sqrt(sq / np - mean * mean), 1e-9);
  std::string csv = h.ToCsv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "bin_low,bin_high,positive,negative");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), ScoreHistogram::kBins + 1);
}

// ----- Trials ---------------------------------------------------------------

ManifestRecord Rec(const std::string &id, const std::string &word, Split s = Split::kTest) {
  ManifestRecord r;
  r.id = id;
  r.word = word;
  r.split = s;
  return r;
}

TEST(TrialsTest, IvOovSplit) {
  std::vector<ManifestRecord> train = {Rec("t1", "Cat", Split::kTrain)};
  std::vector<ManifestRecord> test = {Rec("a", "cat"), Rec("b", "dog")};
  auto split = IvOovSplit(train, test);
  EXPECT_EQ(split.at("cat"), VocabClass::kIV);
  EXPECT_EQ(split.at("dog"), VocabClass::kOOV);
  auto none = IvOovSplit({}, test);
  for (const auto &[w, v] : none) EXPECT_EQ(v, VocabClass::kOOV);
  EXPECT_EQ(ParseVocabClass("oov"), VocabClass::kOOV);
  EXPECT_STREQ(VocabClassName(VocabClass::kIV), "iv");
}

TEST(TrialsTest, CountingExamples) {
  std::vector<ManifestRecord> test = {Rec("a1", "a"), Rec("a2", "a"), Rec("a3", "a"),
                                      Rec("b1", "b"), Rec("b2", "b")};
  auto split = IvOovSplit({}, test);
  TrialSet t = BuildWdTrials(test, split, VocabClass::kOOV);
  EXPECT_EQ(t.NumPositive(), 4u);
  EXPECT_EQ(t.NumNegative(), 6u);
  EXPECT_TRUE(BuildWdTrials(test, split, VocabClass::kIV).trials.empty());

  std::vector<ManifestRecord> single = {Rec("x1", "x"), Rec("x2", "x"), Rec("x3", "x"),
                                        Rec("x4", "x")};
  TrialSet s = BuildWdTrials(single, IvOovSplit({}, single), VocabClass::kOOV);
  EXPECT_EQ(s.NumPositive(), 6u);
  EXPECT_EQ(s.NumNegative(), 0u);

  TrialSet c = BuildCrossTrials(test, split, VocabClass::kOOV);
  EXPECT_EQ(c.trials.size(), 10u);
  EXPECT_EQ(c.NumPositive(), 5u);
}

TEST(TrialsTest, PairsPartitionProperty) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    int n = testing::RandomInt(&rng, 2, 40);
    int words = testing::RandomInt(&rng, 1, 6);
    std::vector<ManifestRecord> test, train;
    for (int i = 0; i < n; ++i)
      test.push_back(Rec("r" + std::to_string(i), "w" + std::to_string(testing::RandomInt(&rng, 0, words - 1))));
    for (int w = 0; w < words; w += 2) train.push_back(Rec("t", "w" + std::to_string(w), Split::kTrain));
    auto split = IvOovSplit(train, test);
    for (VocabClass v : {VocabClass::kIV, VocabClass::kOOV}) {
      uint64_t t_count = 0;
      for (const auto &r : test) t_count += split.at(r.word) == v;
      TrialSet set = BuildWdTrials(test, split, v);
      EXPECT_EQ(set.trials.size(), t_count * (t_count - (t_count > 0)) / 2);
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto &tr : set.trials) {
        auto a = set.ids[tr.a], b = set.ids[tr.b];
        EXPECT_NE(a, b);
        EXPECT_TRUE(seen.insert(std::minmax(a, b)).second);
      }
    }
  }
}

TEST(TrialsTest, ScoringExamplesAndParallelEquality) {
  EmbeddingTable table(2);
  table.Add("x", Eigen::Vector2f(1, 0));
  table.Add("y", Eigen::Vector2f(0, 3));
  table.Add("z", Eigen::Vector2f(2, 0));
  TrialSet set;
  set.ids = {"x", "y", "z"};
  set.trials = {{0, 1, 0, false}, {0, 2, 0, true}};
  ScoreTrials(&set, table, 2);
  EXPECT_EQ(set.trials[0].score, 0.0f);
  EXPECT_EQ(set.trials[1].score, 1.0f);
  set.ids.push_back("missing");
  set.trials.push_back({0, 3, 0, false});
  try {
    ScoreTrials(&set, table, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("missing embedding for id"), std::string::npos);
  }

  std::mt19937_64 rng(7);
  EmbeddingTable big(8);
  Eigen::MatrixXd rows = testing::RandomGaussian(&rng, 60, 8);
  TrialSet many;
  for (int i = 0; i < 60; ++i) {
    many.ids.push_back("id" + std::to_string(i));
    big.Add(many.ids.back(), rows.row(i).transpose().cast<float>());
  }
  for (int k = 0; k < 1000; ++k)
    many.trials.push_back({static_cast<uint32_t>(testing::RandomInt(&rng, 0, 59)),
                           static_cast<uint32_t>(testing::RandomInt(&rng, 0, 59)), 0, false});
  TrialSet seq = many, par = many;
  ScoreTrials(&seq, big, 1);
  ScoreTrials(&par, big, 7);
  for (size_t k = 0; k < many.trials.size(); ++k) {
    EXPECT_EQ(par.trials[k].score, seq.trials[k].score);
    Eigen::VectorXf a = big.Row(many.trials[k].a), b = big.Row(many.trials[k].b);
    double dot = 0, na = 0, nb = 0;
    for (int d = 0; d < 8; ++d) {
      dot += double(a(d)) * b(d);
      na += double(a(d)) * a(d);
      nb += double(b(d)) * b(d);
    }
    EXPECT_EQ(seq.trials[k].score, static_cast<float>(dot / std::sqrt(na * nb)));
  }
  EXPECT_EQ(seq.ToCsv(), par.ToCsv());
  EXPECT_EQ(seq.ToCsv().substr(0, 22), "id_a,id_b,label,score\n");
}

TEST(EmbeddingTableTest, RoundTripAndLayout) {
  EmbeddingTable t(3);
  t.Add("a", Eigen::Vector3f(1, 2, 3));
  t.Add("text:b", Eigen::Vector3f(-1, 0.5f, 0));
  std::string bytes = EncodeEmbeddings(t);
  EXPECT_EQ(bytes.substr(0, 4), "EMB1");
  EXPECT_EQ(bytes.size(), 4 + 4 + 4 + 2 * (4 + 3 * 4) + 1 + 6);
  EXPECT_EQ(DecodeEmbeddings(bytes), t);
  EXPECT_EQ(t.IndexOf("text:b"), 1u);
  EXPECT_THROW(t.Add("a", Eigen::Vector3f(0, 0, 0)), Error);
  EXPECT_THROW(t.Add("c", Eigen::Vector2f(0, 0)), Error);
  EXPECT_THROW(DecodeEmbeddings("EMB2" + bytes.substr(4)), Error);
  EXPECT_THROW(DecodeEmbeddings(bytes.substr(0, bytes.size() - 1)), Error);
}

// ----- Windowed search ------------------------------------------------------

TEST(SegmentWindowsTest, Examples) {
  auto w = SegmentWindows(98, 0.3, 0.15);
  ASSERT_EQ(w.size(), 6u);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(w[k], (FrameSpan{15 * k, 30}));
  EXPECT_EQ(w[5], (FrameSpan{75, 23}));
  EXPECT_EQ(SegmentWindows(20, 0.3, 0.15), std::vector<FrameSpan>({{0, 20}}));
  EXPECT_EQ(SegmentWindows(90, 0.3, 0.3),
            std::vector<FrameSpan>({{0, 30}, {30, 30}, {60, 30}}));
  auto dropped = SegmentWindows(100, 0.3, 0.3);
  EXPECT_EQ(dropped.size(), 3u);
  auto kept = SegmentWindows(105, 0.3, 0.3);
  EXPECT_EQ(kept.back(), (FrameSpan{90, 15}));
  EXPECT_THROW(SegmentWindows(10, 0.0, 0.1), Error);
}

TEST(SegmentWindowsTest, CoverageProperty) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    int t = testing::RandomInt(&rng, 1, 400);
    double win = testing::RandomInt(&rng, 5, 60) / 100.0;
    double hop = win * testing::RandomReal(&rng, 0.25, 1.0);
    auto spans = SegmentWindows(t, win, hop);
    ASSERT_FALSE(spans.empty());
    int w = static_cast<int>(std::lround(win / 0.01));
    for (const auto &s : spans) {
      EXPECT_GE(s.start, 0);
      EXPECT_LE(s.start + s.length, t);
      EXPECT_LE(s.length, std::max(w, 1));
    }
    EXPECT_GE(spans.back().start + spans.back().length + w, t);
  }
}

TEST(StdScoreTest, Examples) {
  Eigen::VectorXd q(3);
  q << 1, 2, 2;
  Eigen::MatrixXd w(2, 3);
  w << 0, 1, -1, 2, 4, 4;
  EXPECT_NEAR(StdScore(q, w), 1.0, 1e-12);
  EXPECT_NEAR(StdScore(q, w.topRows(1)), 0.0, 1e-12);
  std::mt19937_64 rng(9);
  for (int k = 0; k < testing::kPropertySeeds; ++k) {
    Eigen::VectorXd a = testing::RandomGaussian(&rng, 5, 1);
    Eigen::MatrixXd b = testing::RandomGaussian(&rng, testing::RandomInt(&rng, 1, 8), 5);
    double best = -2;
    for (int r = 0; r < b.rows(); ++r)
      best = std::max(best, a.dot(b.row(r).transpose()) / (a.norm() * b.row(r).norm()));
    EXPECT_NEAR(StdScore(a, b), best, 1e-12);
  }
}

TEST(RunSearchTest, ReportShapeAndVocabFilter) {
  SynthConfig sc;
  sc.n_classes = 10;
  sc.n_oov_classes = 3;
  sc.instances_per_class = 10;
  sc.feat_dim = 4;
  sc.proto_len_min = 20;
  sc.proto_len_max = 30;
  SynthCorpus corpus = GenerateCorpus(sc);
  EncoderConfig enc;
  enc.kind = EncoderKind::kPooled;
  enc.hidden = 8;
  enc.embed_dim = 6;
  enc.feat_dim = sc.feat_dim;
  enc.text_vocab = sc.phoneme_vocab;
  enc.text_embed_dim = 4;
  ParamStore params = InitParams(enc, 1);
  std::vector<FeatureSequence> qf, uf;
  for (const auto &r : corpus.queries) qf.push_back(corpus.features.at(r.id));
  for (const auto &u : corpus.search) uf.push_back(corpus.features.at(u.id));
  auto split = IvOovSplit(corpus.train, corpus.test);
  SearchQueries spoken = SpokenQueries(params, enc, corpus.queries, qf, 1);
  EXPECT_EQ(spoken.embeddings.rows(), static_cast<int>(corpus.queries.size()));

  SearchConfig cfg;
  cfg.windows = {0.3};
  cfg.vocabs = {VocabClass::kIV};
  auto conds = RunSearch(params, enc, spoken, corpus.search, uf, split, cfg);
  ASSERT_EQ(conds.size(), 2u);
  std::set<std::string> labels;
  for (const auto &c : conds) {
    labels.insert(c.window);
    EXPECT_EQ(c.vocab, VocabClass::kIV);
    EXPECT_EQ(c.positives + c.negatives, c.scores.size());
    EXPECT_GE(c.eer, 0.0);
    EXPECT_LE(c.eer, 1.0);
  }
  EXPECT_EQ(labels, (std::set<std::string>{"0.30", "aligned"}));
  uint64_t iv_queries = 0;
  for (const auto &w : spoken.words) iv_queries += split.at(w) == VocabClass::kIV;
  EXPECT_EQ(conds[0].scores.size(), iv_queries * corpus.search.size());

  cfg.num_threads = 3;
  auto again = RunSearch(params, enc, spoken, corpus.search, uf, split, cfg);
  for (size_t k = 0; k < conds.size(); ++k) EXPECT_EQ(again[k].eer, conds[k].eer);

  std::vector<std::string> words;
  for (const auto &[w, v] : split) words.push_back(w);
  SearchQueries text = TextQueries(params, enc, words, corpus.lexicon);
  EXPECT_EQ(text.embeddings.rows(), static_cast<int>(words.size()));
  EXPECT_THROW(TextQueries(params, enc, {"no-such-word"}, corpus.lexicon), Error);

  EvalReport report;
  report.AddSearch("std", conds);
  EXPECT_TRUE(report.Json()["eer"]["std"]["iv"].contains("0.30"));
  EXPECT_TRUE(report.Json()["eer"]["std"]["iv"].contains("aligned"));
}

TEST(ReportTest, WordDiscriminationKeys) {
  std::vector<ManifestRecord> train = {Rec("t", "a", Split::kTrain)};
  std::vector<ManifestRecord> test = {Rec("a1", "a"), Rec("a2", "a"), Rec("b1", "b"),
                                      Rec("b2", "b"), Rec("c1", "c")};
  EmbeddingTable table(2);
  table.Add("a1", Eigen::Vector2f(1, 0));
  table.Add("a2", Eigen::Vector2f(1, 0.1f));
  table.Add("b1", Eigen::Vector2f(0, 1));
  table.Add("b2", Eigen::Vector2f(0.1f, 1));
  table.Add("c1", Eigen::Vector2f(-1, 0));
  auto conds = EvalWordDiscrimination(table, train, test,
                                      {VocabClass::kIV, VocabClass::kOOV}, 2);
  EvalReport report;
  report.AddWordDiscrimination(conds);
  const auto &j = report.Json();
  EXPECT_TRUE(j.contains("ap_oov"));
  EXPECT_DOUBLE_EQ(j["ap"]["oov"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["ap"]["iv"].get<double>(), 1.0);
  for (const char *k : {"ap", "ap_cross", "eer", "counts", "score_stats"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_FALSE(j.contains("ap_cross_oov"));

  table.Add("text:a", Eigen::Vector2f(1, 0));
  table.Add("text:b", Eigen::Vector2f(0, 1));
  table.Add("text:c", Eigen::Vector2f(-1, 0));
  EvalReport with_text;
  with_text.AddWordDiscrimination(EvalWordDiscrimination(
      table, train, test, {VocabClass::kIV, VocabClass::kOOV}, 1));
  EXPECT_TRUE(with_text.Json().contains("ap_cross_oov"));
  EXPECT_DOUBLE_EQ(with_text.Json()["ap_cross"]["oov"].get<double>(), 1.0);
}

}  // namespace
}  // namespace awe
