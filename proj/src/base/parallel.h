// base/parallel.h

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

#ifndef AWE_BASE_PARALLEL_H_
#define AWE_BASE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace awe {

/// Number of workers to use when the caller passes 0: the hardware
/// concurrency, at least 1.
int DefaultThreadCount();

/// Splits [0, n) into at most `num_threads` contiguous chunks and calls
/// fn(begin, end) for each chunk on its own thread. Chunk boundaries depend only
/// on n and the thread count, so any per-index output written by `fn` is
/// independent of scheduling. The first exception thrown by a worker is
/// rethrown on the calling thread.
void ParallelFor(size_t n, int num_threads,
                 const std::function<void(size_t, size_t)> &fn);

}  // namespace awe

#endif  // AWE_BASE_PARALLEL_H_
