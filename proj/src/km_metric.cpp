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

#include "modman/km_metric.hpp"

#include <array>

#include "modman/arcs.hpp"
#include "modman/divergence.hpp"

namespace modman {

namespace {

void require_dim(const MetricContext& ctx, int n, const char* where) {
  if (n != ctx.dim()) throw DimensionMismatch(where);
}

/// Matrix of logarithmic means L(p_i, p_j).
Eigen::MatrixXd log_mean_kernel(const RVector& p) {
  const auto n = p.size();
  Eigen::MatrixXd l(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) l(i, j) = logarithmic_mean(p(i), p(j));
  }
  return l;
}

}  // namespace

HermitianMatrix MetricContext::center(const HermitianMatrix& h) const {
  require_dim(*this, h.dim(), "MetricContext::center");
  return h - HermitianMatrix::identity(dim()) * rho_.expectation(h);
}

double log_ratio_kernel(double r) {
  const double x = r - 1.0;
  if (std::abs(x) < 1e-5) {
    // x / log(1 + x) = 1 + x/2 - x^2/12 + x^3/24 - ...
    return 1.0 + x * (0.5 + x * (-1.0 / 12.0 + x / 24.0));
  }
  return x / std::log(r);
}

double logarithmic_mean(double p, double q) { return p * log_ratio_kernel(q / p); }

double km_inner(const MetricContext& ctx, const HermitianMatrix& h,
                const HermitianMatrix& k) {
  const CMatrix& u = ctx.rho().eigenvectors();
  const CMatrix ht = u.adjoint() * ctx.center(h).matrix() * u;
  const CMatrix kt = u.adjoint() * ctx.center(k).matrix() * u;
  const Eigen::MatrixXd l = log_mean_kernel(ctx.rho().eigenvalues());
  return (l.array() * (ht.conjugate().array() * kt.array()).real()).sum();
}

double km_inner_t_operator(const MetricContext& ctx, const HermitianMatrix& h,
                           const HermitianMatrix& k) {
  const ConeVector omega = vector_of_state(ctx.rho());
  const ConeVector th = t_operator_apply(ctx, omega.left(ctx.center(h).matrix()));
  const ConeVector tk = t_operator_apply(ctx, omega.left(ctx.center(k).matrix()));
  return tk.inner(th).real();
}

ConeVector t_operator_apply(const MetricContext& ctx, const ConeVector& v) {
  require_dim(ctx, v.dim(), "t_operator_apply");
  const CMatrix& u = ctx.rho().eigenvectors();
  const RVector& p = ctx.rho().eigenvalues();
  CMatrix vt = u.adjoint() * v.mat * u;
  for (int i = 0; i < ctx.dim(); ++i) {
    for (int j = 0; j < ctx.dim(); ++j) {
      vt(i, j) *= std::sqrt(log_ratio_kernel(p(i) / p(j)));
    }
  }
  return {u * vt * u.adjoint()};
}

double eguchi_fd_inner(const MetricContext& ctx, const HermitianMatrix& h,
                       const HermitianMatrix& k, double step) {
  if (!(step > 0.0 && step <= 0.1)) {
    throw PreconditionError("eguchi_fd_inner: step must lie in (0, 0.1]");
  }
  require_dim(ctx, h.dim(), "eguchi_fd_inner");
  require_dim(ctx, k.dim(), "eguchi_fd_inner");
  const ExponentialArc gamma(ctx.rho(), h);
  const ExponentialArc eta(ctx.rho(), k);
  const std::array<DensityMatrix, 2> g = {arc_point(gamma, step),
                                          arc_point(gamma, -step)};
  const std::array<DensityMatrix, 2> e = {arc_point(eta, step),
                                          arc_point(eta, -step)};
  const double mixed = umegaki_divergence(e[0], g[0]) - umegaki_divergence(e[0], g[1]) -
                       umegaki_divergence(e[1], g[0]) + umegaki_divergence(e[1], g[1]);
  return -mixed / (4.0 * step * step);
}

TangentFunctional tangent_of_generator(const MetricContext& ctx,
                                       const HermitianMatrix& h) {
  const CMatrix& u = ctx.rho().eigenvectors();
  CMatrix ct = u.adjoint() * ctx.center(h).matrix() * u;
  ct.array() *= log_mean_kernel(ctx.rho().eigenvalues()).cast<Complex>().array();
  return TangentFunctional(HermitianMatrix(CMatrix(u * ct * u.adjoint())));
}

HermitianMatrix generator_of_tangent(const MetricContext& ctx,
                                     const TangentFunctional& chi) {
  require_dim(ctx, chi.dim(), "generator_of_tangent");
  const CMatrix& u = ctx.rho().eigenvectors();
  CMatrix ht = u.adjoint() * chi.matrix().matrix() * u;
  ht.array() /= log_mean_kernel(ctx.rho().eigenvalues()).cast<Complex>().array();
  return ctx.center(HermitianMatrix(CMatrix(u * ht * u.adjoint())));
}

}  // namespace modman
