// training/optimizer.cc

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

#include "training/optimizer.h"

#include <cmath>

namespace awe {

namespace {
constexpr char kStepName[] = "step";
}

OptState OptState::ZerosFor(const ParamStore &params) {
  OptState s;
  s.m = params.ZerosLike();
  s.v = params.ZerosLike();
  return s;
}

double GlobalNorm(const ParamStore &grads) {
  return std::sqrt(grads.SquaredNorm());
}

double ClipGlobalNorm(ParamStore *grads, double clip_norm) {
  if (!grads->AllFinite()) AWE_ERR("non-finite gradient");
  double g = GlobalNorm(*grads);
  if (g > clip_norm) grads->Scale(clip_norm / g);
  return g;
}

bool IsDecayed(const Tensor &t) { return t.Rank() >= 2; }

void AdamWStep(ParamStore *params, const ParamStore &grads, OptState *state,
               double lr, const AdamWConfig &cfg) {
  AWE_CHECK(params->SameLayout(grads) && params->SameLayout(state->m) &&
                params->SameLayout(state->v),
            "optimizer shape mismatch between parameters, gradients and state");
  ++state->step;
  const double t = static_cast<double>(state->step);
  const double bc1 = 1.0 - std::pow(cfg.beta1, t);
  const double bc2 = 1.0 - std::pow(cfg.beta2, t);
  auto g_it = grads.begin();
  auto m_it = state->m.begin();
  auto v_it = state->v.begin();
  for (auto p_it = params->begin(); p_it != params->end();
       ++p_it, ++g_it, ++m_it, ++v_it) {
    auto p = p_it->second.Flat();
    auto g = g_it->second.Flat();
    auto m = m_it->second.Flat();
    auto v = v_it->second.Flat();
    if (IsDecayed(p_it->second)) p *= 1.0 - lr * cfg.weight_decay;
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * g.cwiseProduct(g);
    p.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + cfg.eps);
  }
}

void SaveOptState(const OptState &state, const std::filesystem::path &path) {
  ParamStore flat;
  for (const auto &[name, t] : state.m) flat.Add("m/" + name, t.shape).data = t.data;
  for (const auto &[name, t] : state.v) flat.Add("v/" + name, t.shape).data = t.data;
  flat.Add(kStepName, {}).Scalar() = static_cast<double>(state.step);
  SaveParamStore(flat, path);
}

OptState LoadOptState(const std::filesystem::path &path) {
  ParamStore flat = LoadParamStore(path);
  OptState s;
  for (const auto &[name, t] : flat) {
    if (name == kStepName) {
      s.step = static_cast<int64_t>(t.Scalar());
    } else if (name.rfind("m/", 0) == 0) {
      s.m.Add(name.substr(2), t.shape).data = t.data;
    } else if (name.rfind("v/", 0) == 0) {
      s.v.Add(name.substr(2), t.shape).data = t.data;
    } else {
      AWE_ERR(path.string(), ": unexpected optimizer entry ", name);
    }
  }
  AWE_CHECK(s.m.SameLayout(s.v), path.string(),
            ": optimizer moments have different layouts");
  return s;
}

}  // namespace awe
