// encoders/sequence-encoder.cc

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

#include "encoders/sequence-encoder.h"

#include <algorithm>
#include <cmath>

namespace awe {

namespace {

using Eigen::VectorXd;

inline uint32_t U(int v) { return static_cast<uint32_t>(v); }

std::string GruName(const std::string &prefix, int layer, int dir,
                    const char *what) {
  return internal::StrCat(prefix, ".gru", layer, dir == 0 ? ".fwd." : ".bwd.",
                          what);
}

VectorXd Sigmoid(const VectorXd &a) {
  return a.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

}  // namespace

const char *EncoderKindName(EncoderKind kind) {
  return kind == EncoderKind::kPooled ? "pooled" : "recurrent";
}

EncoderKind ParseEncoderKind(const std::string &s) {
  if (s == "pooled") return EncoderKind::kPooled;
  if (s == "recurrent") return EncoderKind::kRecurrent;
  throw ConfigError("encoder.kind must be \"pooled\" or \"recurrent\", got \"" +
                    s + "\"");
}

void EncoderConfig::Validate() const {
  if (hidden < 1 || layers < 1 || embed_dim < 1 || text_embed_dim < 1)
    throw ConfigError("encoder hidden, layers, embed_dim and text_embed_dim "
                      "must be >= 1");
  if (feat_dim < 1) throw ConfigError("encoder.feat_dim must be >= 1");
  if (text_vocab < 1) throw ConfigError("encoder.text_vocab must be >= 1");
  if (pool_segments < 1) throw ConfigError("encoder.pool_segments must be >= 1");
}

Eigen::MatrixXd SegmentPoolingWeights(int num_frames, int num_segments) {
  AWE_CHECK(num_frames >= 1, "cannot pool an empty sequence");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(num_segments, num_frames);
  const double seg_len = static_cast<double>(num_frames) / num_segments;
  for (int s = 0; s < num_segments; ++s) {
    double a = static_cast<double>(s) * num_frames / num_segments;
    double b = static_cast<double>(s + 1) * num_frames / num_segments;
    int first = static_cast<int>(std::floor(a));
    int last = std::min(num_frames - 1, static_cast<int>(std::ceil(b)) - 1);
    for (int t = first; t <= last; ++t) {
      double overlap = std::min<double>(t + 1, b) - std::max<double>(t, a);
      if (overlap > 0) w(s, t) = overlap / seg_len;
    }
  }
  return w;
}

SequenceEncoder::SequenceEncoder(const ParamStore &params,
                                 const EncoderConfig &cfg, std::string prefix,
                                 int input_dim)
    : params_(params), cfg_(cfg), prefix_(std::move(prefix)),
      input_dim_(input_dim) {}

void SequenceEncoder::AddParams(ParamStore *params, const EncoderConfig &cfg,
                                const std::string &prefix, int input_dim) {
  const int H = cfg.hidden;
  int proj_in = H;
  if (cfg.kind == EncoderKind::kPooled) {
    params->Add(prefix + ".mlp0.W", {U(H), U(cfg.pool_segments * input_dim)});
    params->Add(prefix + ".mlp0.b", {U(H)});
    params->Add(prefix + ".mlp1.W", {U(H), U(H)});
    params->Add(prefix + ".mlp1.b", {U(H)});
  } else {
    const int dirs = cfg.bidirectional ? 2 : 1;
    for (int l = 0; l < cfg.layers; ++l) {
      int in = l == 0 ? input_dim : dirs * H;
      for (int d = 0; d < dirs; ++d) {
        params->Add(GruName(prefix, l, d, "Wx"), {U(3 * H), U(in)});
        params->Add(GruName(prefix, l, d, "Wh"), {U(3 * H), U(H)});
        params->Add(GruName(prefix, l, d, "bx"), {U(3 * H)});
        params->Add(GruName(prefix, l, d, "bh"), {U(3 * H)});
      }
    }
    proj_in = dirs * H;
  }
  params->Add(prefix + ".proj.W", {U(cfg.embed_dim), U(proj_in)});
  params->Add(prefix + ".proj.b", {U(cfg.embed_dim)});
}

VectorXd SequenceEncoder::Forward(const RowMatrixXd &x, Trace *tr) const {
  AWE_CHECK(x.rows() >= 1, "empty sequence in batch");
  AWE_CHECK(x.cols() == input_dim_, "input width ", x.cols(), " != expected ",
            input_dim_);
  tr->input = x;
  const auto &proj_w = params_.Get(prefix_ + ".proj.W").Matrix();
  const auto &proj_b = params_.Get(prefix_ + ".proj.b").Flat();

  if (cfg_.kind == EncoderKind::kPooled) {
    const int S = cfg_.pool_segments;
    tr->pool_weights = SegmentPoolingWeights(static_cast<int>(x.rows()), S);
    Eigen::MatrixXd seg = tr->pool_weights * x;  // S x in
    tr->pooled.resize(S * input_dim_);
    for (int s = 0; s < S; ++s)
      tr->pooled.segment(s * input_dim_, input_dim_) = seg.row(s).transpose();
    tr->hidden1 = (params_.Get(prefix_ + ".mlp0.W").Matrix() * tr->pooled +
                   params_.Get(prefix_ + ".mlp0.b").Flat())
                      .array()
                      .tanh();
    tr->hidden2 = (params_.Get(prefix_ + ".mlp1.W").Matrix() * tr->hidden1 +
                   params_.Get(prefix_ + ".mlp1.b").Flat())
                      .array()
                      .tanh();
    return proj_w * tr->hidden2 + proj_b;
  }

  const int H = cfg_.hidden, T = static_cast<int>(x.rows());
  const int dirs = cfg_.bidirectional ? 2 : 1;
  tr->layer_inputs.clear();
  tr->directions.assign(cfg_.layers, std::vector<Trace::Direction>(dirs));
  RowMatrixXd layer_in = x;
  for (int l = 0; l < cfg_.layers; ++l) {
    RowMatrixXd out(T, dirs * H);
    for (int d = 0; d < dirs; ++d) {
      const auto wx = params_.Get(GruName(prefix_, l, d, "Wx")).Matrix();
      const auto wh = params_.Get(GruName(prefix_, l, d, "Wh")).Matrix();
      const auto bx = params_.Get(GruName(prefix_, l, d, "bx")).Flat();
      const auto bh = params_.Get(GruName(prefix_, l, d, "bh")).Flat();
      Trace::Direction &dt = tr->directions[l][d];
      dt.order.resize(T);
      for (int k = 0; k < T; ++k) dt.order[k] = d == 0 ? k : T - 1 - k;
      dt.h_prev.resize(T, H);
      dt.r.resize(T, H);
      dt.z.resize(T, H);
      dt.n.resize(T, H);
      dt.hn.resize(T, H);
      RowMatrixXd xw = layer_in * wx.transpose();
      xw.rowwise() += bx.transpose();
      VectorXd h = VectorXd::Zero(H);
      for (int k = 0; k < T; ++k) {
        int t = dt.order[k];
        VectorXd hw = wh * h + bh;
        VectorXd xt = xw.row(t).transpose();
        VectorXd r = Sigmoid(xt.segment(0, H) + hw.segment(0, H));
        VectorXd z = Sigmoid(xt.segment(H, H) + hw.segment(H, H));
        VectorXd hn = hw.segment(2 * H, H);
        VectorXd n = (xt.segment(2 * H, H).array() + r.array() * hn.array()).tanh();
        dt.h_prev.row(k) = h.transpose();
        dt.r.row(k) = r.transpose();
        dt.z.row(k) = z.transpose();
        dt.n.row(k) = n.transpose();
        dt.hn.row(k) = hn.transpose();
        h = (1.0 - z.array()) * n.array() + z.array() * h.array();
        out.block(t, d * H, 1, H) = h.transpose();
      }
    }
    tr->layer_inputs.push_back(std::move(layer_in));
    layer_in = std::move(out);
  }
  // Final states of the top layer: forward at t = T-1, backward at t = 0.
  tr->final_state.resize(dirs * H);
  tr->final_state.segment(0, H) = layer_in.block(T - 1, 0, 1, H).transpose();
  if (dirs == 2) tr->final_state.segment(H, H) = layer_in.block(0, H, 1, H).transpose();
  return proj_w * tr->final_state + proj_b;
}

RowMatrixXd SequenceEncoder::Backward(const Trace &tr, const VectorXd &dz,
                                      ParamStore *grads) const {
  AWE_CHECK(dz.size() == cfg_.embed_dim, "upstream gradient has width ",
            dz.size(), ", expected ", cfg_.embed_dim);
  const auto proj_w = params_.Get(prefix_ + ".proj.W").Matrix();
  grads->Get(prefix_ + ".proj.b").Flat() += dz;

  if (cfg_.kind == EncoderKind::kPooled) {
    grads->Get(prefix_ + ".proj.W").Matrix() += dz * tr.hidden2.transpose();
    VectorXd da2 = (proj_w.transpose() * dz).array() *
                   (1.0 - tr.hidden2.array().square());
    grads->Get(prefix_ + ".mlp1.W").Matrix() += da2 * tr.hidden1.transpose();
    grads->Get(prefix_ + ".mlp1.b").Flat() += da2;
    VectorXd da1 = (params_.Get(prefix_ + ".mlp1.W").Matrix().transpose() * da2)
                       .array() *
                   (1.0 - tr.hidden1.array().square());
    grads->Get(prefix_ + ".mlp0.W").Matrix() += da1 * tr.pooled.transpose();
    grads->Get(prefix_ + ".mlp0.b").Flat() += da1;
    VectorXd dpooled = params_.Get(prefix_ + ".mlp0.W").Matrix().transpose() * da1;
    const int S = cfg_.pool_segments;
    Eigen::MatrixXd dseg(S, input_dim_);
    for (int s = 0; s < S; ++s)
      dseg.row(s) = dpooled.segment(s * input_dim_, input_dim_).transpose();
    return tr.pool_weights.transpose() * dseg;
  }

  const int H = cfg_.hidden;
  const int T = static_cast<int>(tr.input.rows());
  const int dirs = cfg_.bidirectional ? 2 : 1;
  grads->Get(prefix_ + ".proj.W").Matrix() += dz * tr.final_state.transpose();
  VectorXd dfinal = proj_w.transpose() * dz;

  RowMatrixXd dout = RowMatrixXd::Zero(T, dirs * H);  // grad wrt layer output
  for (int l = cfg_.layers - 1; l >= 0; --l) {
    const RowMatrixXd &layer_in = tr.layer_inputs[l];
    RowMatrixXd din = RowMatrixXd::Zero(T, layer_in.cols());
    for (int d = 0; d < dirs; ++d) {
      const auto wx = params_.Get(GruName(prefix_, l, d, "Wx")).Matrix();
      const auto wh = params_.Get(GruName(prefix_, l, d, "Wh")).Matrix();
      auto gwx = grads->Get(GruName(prefix_, l, d, "Wx")).Matrix();
      auto gwh = grads->Get(GruName(prefix_, l, d, "Wh")).Matrix();
      auto gbx = grads->Get(GruName(prefix_, l, d, "bx")).Flat();
      auto gbh = grads->Get(GruName(prefix_, l, d, "bh")).Flat();
      const Trace::Direction &dt = tr.directions[l][d];
      VectorXd dh = l == cfg_.layers - 1 ? VectorXd(dfinal.segment(d * H, H))
                                         : VectorXd::Zero(H);
      VectorXd dxw(3 * H), dhw(3 * H);
      for (int k = T - 1; k >= 0; --k) {
        int t = dt.order[k];
        dh += dout.block(t, d * H, 1, H).transpose();
        auto r = dt.r.row(k).transpose().array();
        auto z = dt.z.row(k).transpose().array();
        auto n = dt.n.row(k).transpose().array();
        auto hn = dt.hn.row(k).transpose().array();
        auto h_prev = dt.h_prev.row(k).transpose().array();
        Eigen::ArrayXd da_n = dh.array() * (1.0 - z) * (1.0 - n.square());
        Eigen::ArrayXd da_z = dh.array() * (h_prev - n) * z * (1.0 - z);
        Eigen::ArrayXd da_r = da_n * hn * r * (1.0 - r);
        dxw << da_r.matrix(), da_z.matrix(), da_n.matrix();
        dhw << da_r.matrix(), da_z.matrix(), (da_n * r).matrix();
        gwx += dxw * layer_in.row(t);
        gbx += dxw;
        gwh += dhw * dt.h_prev.row(k);
        gbh += dhw;
        din.row(t) += (wx.transpose() * dxw).transpose();
        dh = (dh.array() * z).matrix() + wh.transpose() * dhw;
      }
    }
    dout = std::move(din);
  }
  return dout;
}

}  // namespace awe
