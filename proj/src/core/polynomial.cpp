// Copyright 2026 The thermolength Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polynomial.hpp"

#include <utility>

namespace thermolength {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

double Polynomial::derivative(double x, int order) const {
  const int n = static_cast<int>(coeffs_.size());
  double acc = 0.0;
  // Horner on the differentiated coefficients k!/(k-order)! c_k.
  for (int k = n - 1; k >= order; --k) {
    double factor = 1.0;
    for (int j = 0; j < order; ++j) factor *= static_cast<double>(k - j);
    acc = acc * x + factor * coeffs_[static_cast<std::size_t>(k)];
  }
  return acc;
}

}  // namespace thermolength
