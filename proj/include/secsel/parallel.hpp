// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECSEL_PARALLEL_HPP_
#define SECSEL_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <vector>

namespace secsel {

// Worker cap used by every parallel loop in the library. Zero means
// "available parallelism".
void set_thread_count(std::size_t threads);
std::size_t thread_count();

// Runs body(i) for i in [0, n). Work items are claimed dynamically, so body
// must write only to slots owned by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Block size used to split secant ranges. Fixed, so partial sums and their
// combination order never depend on the worker count.
inline constexpr std::size_t kReductionBlock = 8192;

// Sums block partials by pairwise tree reduction in index order.
double tree_sum(std::vector<double> partials);

// Deterministic blocked sum of term(i) over [0, n).
template <typename Term>
double blocked_sum(std::size_t n, const Term& term) {
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  auto run_block = [&](std::size_t b) {
    const std::size_t begin = b * kReductionBlock;
    const std::size_t end = begin + kReductionBlock < n ? begin + kReductionBlock : n;
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[b] = acc;
  };
  if (blocks <= 1) {
    if (blocks == 1) run_block(0);
  } else {
    parallel_for(blocks, run_block);
  }
  return tree_sum(std::move(partial));
}

}  // namespace secsel

#endif  // SECSEL_PARALLEL_HPP_
