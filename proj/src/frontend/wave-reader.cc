// frontend/wave-reader.cc

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

#include "frontend/wave-reader.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>

#include "base/awe-common.h"
#include "base/binary-io.h"

namespace awe {

namespace {

uint32_t LoadU32(const std::string &b, size_t pos) {
  uint32_t v;
  std::memcpy(&v, b.data() + pos, 4);
  return v;
}

uint16_t LoadU16(const std::string &b, size_t pos) {
  uint16_t v;
  std::memcpy(&v, b.data() + pos, 2);
  return v;
}

void StoreU32(std::string *b, uint32_t v) {
  b->append(reinterpret_cast<const char *>(&v), 4);
}

void StoreU16(std::string *b, uint16_t v) {
  b->append(reinterpret_cast<const char *>(&v), 2);
}

}  // namespace

WaveForm ParseWave(const std::string &bytes) {
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0)
    AWE_ERR("malformed wave header: missing RIFF/WAVE tag");

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  std::optional<std::pair<size_t, size_t>> data;  // offset, size

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    std::string tag = bytes.substr(pos, 4);
    size_t size = LoadU32(bytes, pos + 4);
    size_t body = pos + 8;
    if (tag == "fmt ") {
      if (size < 16 || body + 16 > bytes.size())
        AWE_ERR("malformed wave header: short fmt chunk");
      format = LoadU16(bytes, body);
      channels = LoadU16(bytes, body + 2);
      rate = LoadU32(bytes, body + 4);
      bits = LoadU16(bytes, body + 14);
      have_fmt = true;
    } else if (tag == "data") {
      // Some writers leave the size field unset for streamed output.
      size_t avail = bytes.size() - body;
      data = std::make_pair(body, std::min(size, avail));
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) AWE_ERR("malformed wave header: no fmt chunk");
  if (!data) AWE_ERR("malformed wave header: no data chunk");
  if (format != 1) AWE_ERR("unsupported encoding: format tag ", format);
  if (bits != 16) AWE_ERR("unsupported encoding: ", bits, " bits per sample");
  if (channels != 1) AWE_ERR("non-mono audio: ", channels, " channels");
  if (rate != static_cast<uint32_t>(kRequiredSampleRate))
    AWE_ERR("unsupported sample rate ", rate, " (expected 16000)");

  size_t n = data->second / 2;
  if (n == 0) AWE_ERR("empty audio");
  WaveForm wave;
  wave.sample_rate = static_cast<int>(rate);
  wave.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int16_t s;
    std::memcpy(&s, bytes.data() + data->first + 2 * i, 2);
    wave.samples[i] = s / 32768.0;
  }
  return wave;
}

WaveForm ReadWave(const std::filesystem::path &path) {
  return ParseWave(ReadFileBytes(path));
}

std::string EncodeWave(const WaveForm &wave) {
  uint32_t data_bytes = static_cast<uint32_t>(wave.samples.size() * 2);
  std::string b;
  b.reserve(44 + data_bytes);
  b += "RIFF";
  StoreU32(&b, 36 + data_bytes);
  b += "WAVEfmt ";
  StoreU32(&b, 16);
  StoreU16(&b, 1);  // PCM
  StoreU16(&b, 1);  // mono
  StoreU32(&b, static_cast<uint32_t>(wave.sample_rate));
  StoreU32(&b, static_cast<uint32_t>(wave.sample_rate) * 2);
  StoreU16(&b, 2);
  StoreU16(&b, 16);
  b += "data";
  StoreU32(&b, data_bytes);
  for (double x : wave.samples) {
    double v = std::round(x * 32768.0);
    v = std::clamp(v, -32768.0, 32767.0);
    StoreU16(&b, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  return b;
}

}  // namespace awe
