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

#include "modman/submanifold.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "modman/divergence.hpp"
#include "modman/km_metric.hpp"

namespace modman {

namespace {

void require_size(const SubmanifoldModel& model, const RVector& v, const char* what) {
  if (v.size() != model.size()) {
    throw DimensionMismatch(std::string(what) + ": expected " +
                            std::to_string(model.size()) + " coordinates, got " +
                            std::to_string(v.size()));
  }
  if (!v.allFinite()) throw DomainError(std::string(what) + ": non-finite coordinate");
}

NormalizedExponential evaluate(const SubmanifoldModel& model, const ThetaPoint& theta) {
  return normalized_exp(model.log_rho() + model.combination(theta));
}

RVector expectations(const SubmanifoldModel& model, const DensityMatrix& state) {
  RVector eta(model.size());
  for (int i = 0; i < model.size(); ++i) {
    eta(i) = state.expectation(model.generators()[static_cast<std::size_t>(i)]);
  }
  return eta;
}

Eigen::MatrixXd gram_at(const DensityMatrix& state,
                        const std::vector<HermitianMatrix>& generators) {
  const MetricContext ctx(state);
  const auto m = static_cast<Eigen::Index>(generators.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      g(i, j) = km_inner(ctx, generators[static_cast<std::size_t>(i)],
                         generators[static_cast<std::size_t>(j)]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

}  // namespace

SubmanifoldModel::SubmanifoldModel(DensityMatrix rho,
                                   std::vector<HermitianMatrix> generators,
                                   bool orthonormalize)
    : rho_(std::move(rho)), log_rho_(rho_.log()) {
  if (generators.empty()) {
    throw PreconditionError("SubmanifoldModel: at least one generator is required");
  }
  const MetricContext ctx(rho_);
  for (const auto& h : generators) {
    if (h.dim() != rho_.dim()) {
      throw DimensionMismatch("SubmanifoldModel: generator size differs from rho");
    }
    generators_.push_back(ctx.center(h));
  }

  if (orthonormalize) {
    std::vector<HermitianMatrix> basis;
    for (const auto& h : generators_) {
      HermitianMatrix v = h;
      for (const auto& e : basis) v = v - e * km_inner(ctx, h, e);
      const double norm2 = km_inner(ctx, v, v);
      if (norm2 <= 1e-10) {
        throw PreconditionError("SubmanifoldModel: generators are linearly dependent");
      }
      basis.push_back(v * (1.0 / std::sqrt(norm2)));
    }
    generators_ = std::move(basis);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram());
  if (es.eigenvalues()(0) <= 1e-10) {
    throw PreconditionError(
        "SubmanifoldModel: generators are linearly dependent (Gram eigenvalue " +
        std::to_string(es.eigenvalues()(0)) + ")");
  }
}

HermitianMatrix SubmanifoldModel::combination(const ThetaPoint& theta) const {
  require_size(*this, theta.coords, "theta");
  CMatrix sum = CMatrix::Zero(dim(), dim());
  for (int i = 0; i < size(); ++i) {
    sum += theta.coords(i) * generators_[static_cast<std::size_t>(i)].matrix();
  }
  return HermitianMatrix(sum);
}

Eigen::MatrixXd SubmanifoldModel::gram() const { return gram_at(rho_, generators_); }

DensityMatrix state_at(const SubmanifoldModel& model, const ThetaPoint& theta) {
  return evaluate(model, theta).state;
}

EtaPoint dual_coords(const SubmanifoldModel& model, const ThetaPoint& theta) {
  return {expectations(model, state_at(model, theta))};
}

double potential_theta(const SubmanifoldModel& model, const ThetaPoint& theta) {
  const DensityMatrix state = state_at(model, theta);
  return umegaki_divergence(model.rho(), state) +
         theta.coords.dot(expectations(model, model.rho()));
}

double log_partition_theta(const SubmanifoldModel& model, const ThetaPoint& theta) {
  return evaluate(model, theta).log_partition;
}

Eigen::MatrixXd metric_at(const SubmanifoldModel& model, const ThetaPoint& theta) {
  return gram_at(state_at(model, theta), model.generators());
}

ThetaPoint solve_theta(const SubmanifoldModel& model, const EtaPoint& eta,
                       const SolveOptions& options) {
  require_size(model, eta.coords, "eta");
  const RVector& target = eta.coords;

  ThetaPoint theta{RVector::Zero(model.size())};
  NormalizedExponential current = evaluate(model, theta);
  auto gap = [&](const ThetaPoint& th, double zeta) {
    return zeta - th.coords.dot(target);
  };

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const RVector gradient = expectations(model, current.state) - target;
    const double residual = gradient.cwiseAbs().maxCoeff();
    if (residual <= options.tolerance) return theta;

    const Eigen::MatrixXd g = gram_at(current.state, model.generators());
    const RVector direction = g.ldlt().solve(-gradient);
    const double slope = gradient.dot(direction);
    const double f0 = gap(theta, current.log_partition);
    // Rounding floor of the gap; below it the Armijo test cannot resolve progress.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(f0));

    double step = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= options.max_halvings; ++halving, step *= 0.5) {
      ThetaPoint trial{theta.coords + step * direction};
      // Steps leaving the theta box or the faithful region are shortened.
      if (trial.coords.cwiseAbs().maxCoeff() > options.theta_limit) continue;
      std::optional<NormalizedExponential> next;
      try {
        next.emplace(evaluate(model, trial));
      } catch (const NumericError&) {
        continue;
      } catch (const FaithfulnessError&) {
        continue;
      }
      if (gap(trial, next->log_partition) <= f0 + options.armijo * step * slope + slack) {
        theta = std::move(trial);
        current = std::move(*next);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (residual <= options.accept) return theta;
      throw NotAttainedError("solve_theta: line search stalled at residual " +
                             std::to_string(residual) +
                             "; eta is likely outside the attainable range");
    }
  }

  const double residual =
      (expectations(model, current.state) - target).cwiseAbs().maxCoeff();
  if (residual <= options.accept) return theta;
  throw NotAttainedError("solve_theta: no convergence after " +
                         std::to_string(options.max_iterations) + " iterations");
}

DensityMatrix e_geodesic(const SubmanifoldModel& model, const ThetaPoint& theta_a,
                         const ThetaPoint& theta_b, double t) {
  require_size(model, theta_a.coords, "theta_a");
  require_size(model, theta_b.coords, "theta_b");
  return state_at(model, ThetaPoint{(1.0 - t) * theta_a.coords + t * theta_b.coords});
}

DensityMatrix m_geodesic(const DensityMatrix& sigma_a, const DensityMatrix& sigma_b,
                         double t) {
  if (sigma_a.dim() != sigma_b.dim()) throw DimensionMismatch("m_geodesic");
  if (t < 0.0 || t > 1.0) throw PreconditionError("m_geodesic: t must lie in [0, 1]");
  return DensityMatrix(sigma_a.hermitian() * (1.0 - t) + sigma_b.hermitian() * t);
}

double pythagorean_residual(const SubmanifoldModel& model, const DensityMatrix& psi,
                            const ThetaPoint& theta, double s, double t) {
  const HermitianMatrix h = model.combination(theta);
  const DensityMatrix gs = state_at(model, ThetaPoint{s * theta.coords});
  const DensityMatrix gt = state_at(model, ThetaPoint{t * theta.coords});
  const double mismatch = std::abs(psi.expectation(h) - gs.expectation(h));
  if (mismatch > 1e-8) {
    throw PreconditionError("pythagorean_residual: energy of psi differs from gamma_s by " +
                            std::to_string(mismatch));
  }
  return std::abs(umegaki_divergence(psi, gt) - umegaki_divergence(psi, gs) -
                  umegaki_divergence(gs, gt));
}

double connection_duality_variation(const ExponentialArc& arc,
                                    const TangentFunctional& chi,
                                    std::span<const double> ts) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double t : ts) {
    const MetricContext ctx(arc_point(arc, t));
    // Represent chi at gamma_t by its generator, then pair with the velocity.
    const HermitianMatrix k = generator_of_tangent(ctx, chi);
    const double value = km_inner(ctx, k, arc.generator());
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  return ts.empty() ? 0.0 : hi - lo;
}

}  // namespace modman
