// base/binary-io.h

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

#ifndef AWE_BASE_BINARY_IO_H_
#define AWE_BASE_BINARY_IO_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

// Little-endian primitives shared by the binary file formats. All readers
// throw awe::Error("truncated ...") on short reads.

namespace awe {

void WriteMagic(std::ostream &os, std::string_view magic);
/// Throws "bad magic" if the next bytes differ from `magic`.
void ExpectMagic(std::istream &is, std::string_view magic);

void WriteU32(std::ostream &os, uint32_t v);
uint32_t ReadU32(std::istream &is);

void WriteF32Array(std::ostream &os, std::span<const float> v);
void ReadF32Array(std::istream &is, std::span<float> v);
void WriteF64Array(std::ostream &os, std::span<const double> v);
void ReadF64Array(std::istream &is, std::span<double> v);

void WriteString(std::ostream &os, const std::string &s);  // u32 length + bytes
std::string ReadString(std::istream &is);

/// Bytes left between the current read position and the end of the stream.
uint64_t RemainingBytes(std::istream &is);

/// Writes the file atomically enough for our purposes: to `path`.tmp, then
/// renamed over `path`.
void WriteFileBytes(const std::filesystem::path &path, const std::string &bytes);
std::string ReadFileBytes(const std::filesystem::path &path);

}  // namespace awe

#endif  // AWE_BASE_BINARY_IO_H_
