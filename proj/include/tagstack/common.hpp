/*
 * Copyright 2026 The tagstack authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef TAGSTACK_COMMON_HPP_
#define TAGSTACK_COMMON_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tagstack {

/// Bad user input: malformed files, out-of-range parameters, inconsistent
/// datasets. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failures during computation (divergence, degenerate data, I/O loss).
/// The CLI maps this to exit code 2.
class PipelineError : public std::runtime_error {
 public:
  explicit PipelineError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dense row-major matrix of doubles. The one matrix type shared by the
/// learner, stacking and boosting layers.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return data[static_cast<size_t>(r) * cols + c];
  }
  std::span<const double> row(int r) const {
    return {data.data() + static_cast<size_t>(r) * cols,
            static_cast<size_t>(cols)};
  }
  std::span<double> row(int r) {
    return {data.data() + static_cast<size_t>(r) * cols,
            static_cast<size_t>(cols)};
  }
};

/// Rows are per-item class-probability vectors; cols = number of classes.
/// Every row is nonnegative and sums to 1 within tolerance.
using ProbMatrix = DenseMatrix;

}  // namespace tagstack

#endif  // TAGSTACK_COMMON_HPP_
