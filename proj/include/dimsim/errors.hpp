/*
 * Copyright 2026 The dimsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimsim {

/// Two vectors of different length were handed to a distance or classifier.
class DimensionError : public std::invalid_argument {
 public:
  DimensionError(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// A caller-supplied parameter is outside its valid domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dimsim
