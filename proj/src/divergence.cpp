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

#include "modman/divergence.hpp"

namespace modman {

RelativeModularOperator::RelativeModularOperator(DensityMatrix sigma,
                                                 DensityMatrix tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.dim() != tau_.dim()) {
    throw DimensionMismatch("relative modular operator: dimensions " +
                            std::to_string(sigma_.dim()) + " and " +
                            std::to_string(tau_.dim()) + " differ");
  }
}

Eigen::MatrixXd RelativeModularOperator::eigenvalues() const {
  return sigma_.eigenvalues() * tau_.eigenvalues().cwiseInverse().transpose();
}

ConeVector RelativeModularOperator::eigenvector(int i, int j) const {
  return {sigma_.eigenvectors().col(i) * tau_.eigenvectors().col(j).adjoint()};
}

template <typename F>
ConeVector RelativeModularOperator::apply_spectral(F&& f, const ConeVector& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("RelativeModularOperator");
  const CMatrix& u = sigma_.eigenvectors();
  const CMatrix& w = tau_.eigenvectors();
  CMatrix coeff = u.adjoint() * v.mat * w;
  const RVector& s = sigma_.eigenvalues();
  const RVector& t = tau_.eigenvalues();
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) coeff(i, j) *= f(s(i), t(j));
  }
  return {u * coeff * w.adjoint()};
}

ConeVector RelativeModularOperator::apply(const ConeVector& v) const {
  return apply_spectral([](double s, double t) { return Complex(s / t); }, v);
}

ConeVector RelativeModularOperator::apply_power(Complex z, const ConeVector& v) const {
  return apply_spectral(
      [z](double s, double t) { return std::exp(z * (std::log(s) - std::log(t))); },
      v);
}

ConeVector RelativeModularOperator::apply_log(const ConeVector& v) const {
  return apply_spectral(
      [](double s, double t) { return Complex(std::log(s) - std::log(t)); }, v);
}

ConeVector RelativeModularOperator::apply_tomita(const ConeVector& v) const {
  return modular_conjugate(apply_power(0.5, v));
}

RelativeModularOperator relative_modular(const DensityMatrix& sigma,
                                         const DensityMatrix& tau) {
  return RelativeModularOperator(sigma, tau);
}

double araki_divergence(const DensityMatrix& sigma, const DensityMatrix& tau) {
  if (sigma.dim() != tau.dim()) throw DimensionMismatch("araki_divergence");
  // Components of Phi = sigma^{1/2} along |u_i><v_j| are sqrt(s_i) <u_i|v_j>.
  const CMatrix overlap = sigma.eigenvectors().adjoint() * tau.eigenvectors();
  const RVector& s = sigma.eigenvalues();
  const RVector& t = tau.eigenvalues();
  double d = 0.0;
  for (int i = 0; i < sigma.dim(); ++i) {
    const double log_s = std::log(s(i));
    for (int j = 0; j < sigma.dim(); ++j) {
      d += s(i) * std::norm(overlap(i, j)) * (log_s - std::log(t(j)));
    }
  }
  return d;
}

double umegaki_divergence(const DensityMatrix& sigma, const DensityMatrix& tau) {
  if (sigma.dim() != tau.dim()) throw DimensionMismatch("umegaki_divergence");
  return sigma.expectation(sigma.log() - tau.log());
}

double araki_dual_form(const DensityMatrix& sigma, const DensityMatrix& tau) {
  const RelativeModularOperator reversed(tau, sigma);
  const ConeVector phi = vector_of_state(sigma);
  return -reversed.apply_log(phi).inner(phi).real();
}

}  // namespace modman
