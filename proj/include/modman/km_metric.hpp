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

#ifndef MODMAN_KM_METRIC_HPP
#define MODMAN_KM_METRIC_HPP

#include "modman/matfun.hpp"
#include "modman/standard_form.hpp"

// Kubo-Mori (Bogoliubov) scalar product on the tangent space at a faithful
// state rho. For centered generators h_c = h - Tr(rho h) it reads
//
//   (k, h)_rho = int_0^1 Tr(rho^u h_c rho^{1-u} k_c) du
//              = sum_ij L(p_i, p_j) conj(h_c,ij) k_c,ij      (eigenbasis of rho)
//              = (T k_c Omega, T h_c Omega),  T = ((Delta - 1)/log Delta)^{1/2}
//
// with L the logarithmic mean.

namespace modman {

class MetricContext {
 public:
  explicit MetricContext(DensityMatrix rho) : rho_(std::move(rho)) {}

  int dim() const { return rho_.dim(); }
  const DensityMatrix& rho() const { return rho_; }
  /// h - Tr(rho h).
  HermitianMatrix center(const HermitianMatrix& h) const;

 private:
  DensityMatrix rho_;
};

/// (r - 1)/ln r, with g(1) = 1.
double log_ratio_kernel(double r);
/// (p - q)/(ln p - ln q), with L(p, p) = p.
double logarithmic_mean(double p, double q);

double km_inner(const MetricContext& ctx, const HermitianMatrix& h,
                const HermitianMatrix& k);

/// The same scalar product evaluated as (T k_c Omega, T h_c Omega) in the
/// GNS space.
double km_inner_t_operator(const MetricContext& ctx, const HermitianMatrix& h,
                           const HermitianMatrix& k);

/// T = ((Delta - 1)/log Delta)^{1/2}: in the eigenbasis of rho, entry (i, j)
/// of the matrix is scaled by g(p_i/p_j)^{1/2}.
ConeVector t_operator_apply(const MetricContext& ctx, const ConeVector& v);

/// -d/ds d/dt D(eta_s || gamma_t) at s = t = 0 by a central mixed difference
/// of the Umegaki divergence, where eta and gamma are the arcs through rho
/// generated by k and h. Step must lie in (0, 0.1].
double eguchi_fd_inner(const MetricContext& ctx, const HermitianMatrix& h,
                       const HermitianMatrix& k, double step);

/// Initial velocity int_0^1 rho^u h_c rho^{1-u} du of the arc generated by h.
TangentFunctional tangent_of_generator(const MetricContext& ctx,
                                       const HermitianMatrix& h);

/// Inverse of tangent_of_generator: the centered generator whose arc leaves
/// rho with velocity chi.
HermitianMatrix generator_of_tangent(const MetricContext& ctx,
                                     const TangentFunctional& chi);

}  // namespace modman

#endif  // MODMAN_KM_METRIC_HPP
