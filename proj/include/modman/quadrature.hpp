/*
 * Copyright 2026 The modman Authors
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

#ifndef MODMAN_QUADRATURE_HPP
#define MODMAN_QUADRATURE_HPP

#include <boost/math/quadrature/gauss.hpp>

namespace modman {

/// 64-node Gauss-Legendre rule on [0, 1]. Works for any integrand whose
/// values support + and scalar *; `zero` fixes the accumulator type (a
/// matrix of the right shape, a complex number, ...).
template <typename F, typename T>
T gauss_legendre_unit(F&& f, T zero) {
  using Rule = boost::math::quadrature::gauss<double, 64>;
  // Boost stores the non-negative half of the symmetric node set.
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  T sum = zero;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double w = 0.5 * weights[i];
    sum = sum + w * f(0.5 * (1.0 + nodes[i]));
    sum = sum + w * f(0.5 * (1.0 - nodes[i]));
  }
  return sum;
}

}  // namespace modman

#endif  // MODMAN_QUADRATURE_HPP
