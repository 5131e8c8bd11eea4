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

#pragma once

#include <span>
#include <vector>

namespace thermolength {

// Dense polynomial with coefficients in ascending powers: c0 + c1 x + c2 x^2.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  double operator()(double x) const { return derivative(x, 0); }

  // Value of the order-th derivative at x.
  double derivative(double x, int order) const;

  std::span<const double> coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

 private:
  std::vector<double> coeffs_;
};

}  // namespace thermolength
