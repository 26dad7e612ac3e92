// base/awe-common.h

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

#ifndef AWE_BASE_AWE_COMMON_H_
#define AWE_BASE_AWE_COMMON_H_

#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace awe {

/// Base class of every error raised by the library. Messages are meant to be
/// shown to the user as-is.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Raised for invalid configuration (unknown keys, out-of-range values). The
/// command-line tool maps it to exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &what) : Error(what) {}
};

namespace internal {

template <typename... Args>
std::string StrCat(const Args &...args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace internal

#define AWE_ERR(...) throw ::awe::Error(::awe::internal::StrCat(__VA_ARGS__))

#define AWE_CHECK(cond, ...)                                       \
  do {                                                             \
    if (!(cond)) throw ::awe::Error(::awe::internal::StrCat(__VA_ARGS__)); \
  } while (0)

using RowMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatrixXf =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Frame shift of every feature sequence, in seconds.
inline constexpr double kFrameShiftSeconds = 0.010;

/// Upper bound on exp(log_temperature) when it scales similarity logits.
inline constexpr double kMaxLogitScale = 100.0;

}  // namespace awe

#endif  // AWE_BASE_AWE_COMMON_H_
