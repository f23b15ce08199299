// Copyright 2023 The Authors.
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

#include "trophilb/linalg.hpp"

#include <numeric>

namespace trophilb {

ExactMatrix embed(const ExactMatrix& m, unsigned order) {
  ExactMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed(order);
  }
  return out;
}

unsigned common_order(const ExactMatrix& m) {
  unsigned order = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) order = std::lcm(order, m(i, j).order());
  }
  return order;
}

}  // namespace trophilb
