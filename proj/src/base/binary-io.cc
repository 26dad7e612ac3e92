// base/binary-io.cc

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

#include "base/binary-io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "base/awe-common.h"

namespace awe {

static_assert(std::endian::native == std::endian::little,
              "file formats assume a little-endian host");

namespace {

void ReadExact(std::istream &is, char *dst, size_t n, const char *what) {
  is.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<size_t>(is.gcount()) != n)
    AWE_ERR("truncated input while reading ", what);
}

}  // namespace

void WriteMagic(std::ostream &os, std::string_view magic) {
  os.write(magic.data(), static_cast<std::streamsize>(magic.size()));
}

void ExpectMagic(std::istream &is, std::string_view magic) {
  std::string got(magic.size(), '\0');
  is.read(got.data(), static_cast<std::streamsize>(got.size()));
  if (static_cast<size_t>(is.gcount()) != magic.size() || got != magic)
    AWE_ERR("bad magic: expected \"", magic, "\"");
}

void WriteU32(std::ostream &os, uint32_t v) {
  os.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

uint32_t ReadU32(std::istream &is) {
  uint32_t v = 0;
  ReadExact(is, reinterpret_cast<char *>(&v), sizeof(v), "u32");
  return v;
}

void WriteF32Array(std::ostream &os, std::span<const float> v) {
  os.write(reinterpret_cast<const char *>(v.data()),
           static_cast<std::streamsize>(v.size_bytes()));
}

void ReadF32Array(std::istream &is, std::span<float> v) {
  ReadExact(is, reinterpret_cast<char *>(v.data()), v.size_bytes(),
            "float32 payload");
}

void WriteF64Array(std::ostream &os, std::span<const double> v) {
  os.write(reinterpret_cast<const char *>(v.data()),
           static_cast<std::streamsize>(v.size_bytes()));
}

void ReadF64Array(std::istream &is, std::span<double> v) {
  ReadExact(is, reinterpret_cast<char *>(v.data()), v.size_bytes(),
            "float64 payload");
}

void WriteString(std::ostream &os, const std::string &s) {
  WriteU32(os, static_cast<uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string ReadString(std::istream &is) {
  uint32_t n = ReadU32(is);
  if (n > RemainingBytes(is)) AWE_ERR("truncated input while reading string");
  std::string s(n, '\0');
  ReadExact(is, s.data(), n, "string");
  return s;
}

uint64_t RemainingBytes(std::istream &is) {
  std::streampos here = is.tellg();
  if (here < 0) return 0;
  is.seekg(0, std::ios::end);
  std::streampos end = is.tellg();
  is.seekg(here);
  return static_cast<uint64_t>(end - here);
}

void WriteFileBytes(const std::filesystem::path &path,
                    const std::string &bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) AWE_ERR("cannot open ", tmp.string(), " for writing");
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) AWE_ERR("write failed: ", tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string ReadFileBytes(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) AWE_ERR("cannot open ", path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace awe
