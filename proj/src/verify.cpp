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

#include "modman/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "modman/arcs.hpp"
#include "modman/divergence.hpp"
#include "modman/km_metric.hpp"
#include "modman/quadrature.hpp"
#include "modman/random.hpp"
#include "modman/standard_form.hpp"
#include "modman/submanifold.hpp"

namespace modman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<double, 5> kGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

HermitianMatrix random_traceless(Rng& rng, int n) {
  const HermitianMatrix h = random_hermitian(rng, n);
  return h - HermitianMatrix::identity(n) * (h.trace() / n);
}

/// Random generator whose centered part has operator norm at least 0.1.
HermitianMatrix random_generator(Rng& rng, const DensityMatrix& rho) {
  const HermitianMatrix h = random_hermitian(rng, rho.dim());
  const HermitianMatrix hc = MetricContext(rho).center(h);
  const double norm = operator_norm(hc);
  return norm < 0.1 ? h * (0.1 / norm) : h;
}

/// Largest s with sigma + s delta positive semidefinite (infinite if none).
double max_feasible_step(const DensityMatrix& sigma, const HermitianMatrix& delta) {
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(-delta.matrix(), sigma.matrix());
  const double mu = es.eigenvalues().maxCoeff();
  return mu > 0.0 ? 1.0 / mu : kInf;
}

// --- araki-entropy -------------------------------------------------------

double divergence_three_way(Rng& rng, int n) {
  const DensityMatrix sigma = random_density(rng, n);
  const DensityMatrix tau = random_density(rng, n);
  const double a = araki_divergence(sigma, tau);
  const double u = umegaki_divergence(sigma, tau);
  const double d = araki_dual_form(sigma, tau);
  return std::max({std::abs(a - u), std::abs(a - d), std::abs(u - d)});
}

double divergence_positivity(Rng& rng, int n) {
  const DensityMatrix sigma = random_density(rng, n);
  const DensityMatrix tau = random_density(rng, n);
  return std::max(std::max(0.0, -araki_divergence(sigma, tau)),
                  std::abs(araki_divergence(sigma, sigma)));
}

// --- exponential-arcs ----------------------------------------------------

double arc_definition(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  const DensityMatrix psi = random_density(rng, n);
  double worst = 0.0;
  for (double s : kGrid) {
    for (double t : kGrid) worst = std::max(worst, arc_residual(arc, psi, s, t));
  }
  return worst;
}

double pythagorean(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const int m = std::min(2, n * n - 1);
  std::vector<HermitianMatrix> gens;
  for (int i = 0; i < m; ++i) gens.push_back(random_hermitian(rng, n));
  const SubmanifoldModel model(rho, gens);
  ThetaPoint theta{RVector(m)};
  for (int i = 0; i < m; ++i) theta.coords(i) = rng.uniform(-1.0, 1.0);
  const HermitianMatrix h = model.combination(theta);
  const HermitianMatrix h_tl = h - HermitianMatrix::identity(n) * (h.trace() / n);
  const double hh = (h_tl.matrix().adjoint() * h_tl.matrix()).trace().real();

  double worst = 0.0;
  for (double s : {0.25, 0.5, 0.75}) {
    const DensityMatrix gs = state_at(model, ThetaPoint{s * theta.coords});
    // Traceless direction orthogonal to h: moving along it keeps the energy.
    HermitianMatrix delta = random_traceless(rng, n);
    const double overlap = (h_tl.matrix().adjoint() * delta.matrix()).trace().real();
    delta = delta - h_tl * (overlap / hh);
    const double step = 0.5 * std::min(1.0, max_feasible_step(gs, delta));
    const DensityMatrix psi(gs.hermitian() + delta * step);
    for (double t : kGrid) {
      worst = std::max(worst, pythagorean_residual(model, psi, theta, s, t));
    }
  }
  return worst;
}

// --- scalar-potential ----------------------------------------------------

/// Negative of the smallest forward difference of the energy on a 21-point
/// grid; the check demands a strictly positive margin.
double energy_increasing(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_generator(rng, rho));
  double min_diff = kInf;
  double prev = energy_along(arc, 0.0);
  for (int i = 1; i <= 20; ++i) {
    const double e = energy_along(arc, i / 20.0);
    min_diff = std::min(min_diff, e - prev);
    prev = e;
  }
  return -min_diff;
}

double potential_increment(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  double worst = 0.0;
  for (double s : kGrid) {
    const DensityMatrix gs = arc_point(arc, s);
    for (double t : kGrid) {
      const double rhs = potential(arc, s) + umegaki_divergence(gs, arc_point(arc, t)) +
                         (t - s) * arc.energy(gs);
      worst = std::max(worst, std::abs(potential(arc, t) - rhs));
    }
  }
  return worst;
}

/// Largest violation of Phi(t) >= Phi(s) + (t - s) h(gamma_s), as a
/// positive number (0 when the tangent line stays below).
double tangent_line(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  std::array<double, 11> phi{};
  std::array<double, 11> slope{};
  for (int i = 0; i <= 10; ++i) {
    phi[i] = potential(arc, i / 10.0);
    slope[i] = energy_along(arc, i / 10.0);
  }
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double gap = phi[j] - phi[i] - (j - i) / 10.0 * slope[i];
      worst = std::max(worst, -gap);
    }
  }
  return worst;
}

double legendre_identity(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double s = i / 10.0;
    const double alpha = energy_along(arc, s);
    worst = std::max(worst,
                     std::abs(potential(arc, s) + legendre_dual(arc, alpha) - s * alpha));
  }
  return worst;
}

// --- matrix-case ---------------------------------------------------------

double potential_is_log_partition(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    worst = std::max(worst, std::abs(potential(arc, t) - log_partition(arc, t)));
  }
  return worst;
}

// --- relative-hamiltonian ------------------------------------------------

double theorem_derivative(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  const DensityMatrix psi = random_density(rng, n);
  const double eps = 1e-4;
  const double fd = (umegaki_divergence(psi, arc_point(arc, eps)) -
                     umegaki_divergence(psi, arc_point(arc, -eps))) /
                    (2.0 * eps);
  return std::abs(fd - (arc.energy(rho) - arc.energy(psi)));
}

/// D(psi||gamma_t) = D(psi||omega) - t psi(h) + zeta(t).
double theorem_identity(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  const DensityMatrix psi = random_density(rng, n);
  const double base = umegaki_divergence(psi, rho);
  double worst = 0.0;
  for (double t : kGrid) {
    const double lhs = umegaki_divergence(psi, arc_point(arc, t));
    const double rhs = base - t * arc.energy(psi) + log_partition(arc, t);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// gamma_dot_0(x) = (T h Omega, T (x - omega(x))^* Omega), for random x.
double initial_velocity(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const HermitianMatrix h = random_hermitian(rng, n);
  const ExponentialArc arc(rho, h);
  const MetricContext ctx(rho);
  const GnsSpace g(rho);
  const TangentFunctional velocity = arc_derivative(arc, 0.0);
  const ConeVector th = t_operator_apply(ctx, g.omega().left(ctx.center(h).matrix()));
  double worst = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const CMatrix x = random_operator(rng, n);
    const CMatrix xc = x - g.state(x) * CMatrix::Identity(n, n);
    const ConeVector tx = t_operator_apply(ctx, g.omega().left(xc.adjoint()));
    worst = std::max(worst, std::abs(velocity(x) - th.inner(tx)));
  }
  return worst;
}

double additivity(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const HermitianMatrix h = random_hermitian(rng, n);
  const HermitianMatrix k = random_hermitian(rng, n);
  // The reverse arc with generator -h leads from gamma_1 back to rho.
  const DensityMatrix phi = arc_point(ExponentialArc(rho, h), 1.0);
  const DensityMatrix back = arc_point(ExponentialArc(phi, -h), 1.0);
  return std::max(compose_arcs(rho, h, k), operator_norm(CMatrix(back.matrix() - rho.matrix())));
}

// --- metric --------------------------------------------------------------

struct MetricInstance {
  MetricContext ctx;
  HermitianMatrix h;
  HermitianMatrix k;
};

MetricInstance random_metric_instance(Rng& rng, int n) {
  DensityMatrix rho = random_density(rng, n);
  HermitianMatrix h = random_hermitian(rng, n);
  HermitianMatrix k = random_hermitian(rng, n);
  return {MetricContext(std::move(rho)), std::move(h), std::move(k)};
}

/// Log-mean formula against the T-operator form and against 64-node
/// Gauss-Legendre quadrature of int_0^1 Tr(rho^u h_c rho^{1-u} k_c) du.
double metric_quadrature(Rng& rng, int n) {
  const MetricInstance in = random_metric_instance(rng, n);
  const DensityMatrix& rho = in.ctx.rho();
  const CMatrix hc = in.ctx.center(in.h).matrix();
  const CMatrix kc = in.ctx.center(in.k).matrix();
  const Complex quad = gauss_legendre_unit(
      [&](double u) {
        return Complex((rho.power(u).matrix() * hc * rho.power(1.0 - u).matrix() * kc).trace());
      },
      Complex(0.0));
  const double formula = km_inner(in.ctx, in.h, in.k);
  const double t_form = km_inner_t_operator(in.ctx, in.h, in.k);
  return std::max({std::abs(formula - quad.real()), std::abs(quad.imag()),
                   std::abs(formula - t_form)});
}

double metric_eguchi(Rng& rng, int n) {
  const MetricInstance in = random_metric_instance(rng, n);
  return std::abs(eguchi_fd_inner(in.ctx, in.h, in.k, 1e-3) - km_inner(in.ctx, in.h, in.k));
}

/// Observed order of the Eguchi difference from base step 0.01 and two
/// halvings; residual is the deviation of both estimates from 2.
double metric_eguchi_order(Rng& rng, int n) {
  const MetricInstance in = random_metric_instance(rng, n);
  const double exact = km_inner(in.ctx, in.h, in.k);
  std::array<double, 3> err{};
  double step = 0.01;
  for (double& e : err) {
    e = std::abs(eguchi_fd_inner(in.ctx, in.h, in.k, step) - exact);
    step *= 0.5;
  }
  const double p1 = std::log2(err[0] / err[1]);
  const double p2 = std::log2(err[1] / err[2]);
  return std::max(std::abs(p1 - 2.0), std::abs(p2 - 2.0));
}

double metric_closed_form(Rng&, int) {
  const MetricContext ctx(DensityMatrix::diagonal(std::array{0.75, 0.25}));
  CMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const HermitianMatrix sx(x);
  return std::abs(km_inner(ctx, sx, sx) - 1.0 / std::log(3.0));
}

/// Number of sampled generators with km(h, h) <= 1e-12 although
/// ||h_c|| > 1e-6. Samples: random unit h, shifted copies c 1 + h, small
/// multiples, and pure multiples of the identity.
double metric_nondegeneracy(Rng& rng, int n) {
  const MetricContext ctx(random_density(rng, n));
  const HermitianMatrix one = HermitianMatrix::identity(n);
  std::vector<HermitianMatrix> samples;
  for (int i = 0; i < 4; ++i) {
    const HermitianMatrix h = random_hermitian(rng, n);
    const double c = rng.uniform(-5.0, 5.0);
    samples.push_back(h);
    samples.push_back(one * c + h);
    samples.push_back(one * c + h * 1e-2);
    samples.push_back(one * c);
  }
  int violations = 0;
  for (const auto& h : samples) {
    const double q = km_inner(ctx, h, h);
    const double hc = operator_norm(ctx.center(h));
    if (q <= 1e-12 && hc > 1e-6) ++violations;
  }
  return violations;
}

/// km(h, h) >= p_min ||h_c||_F^2, relative to ||h_c||_F^2.
double metric_lower_bound(Rng& rng, int n) {
  const MetricContext ctx(random_density(rng, n));
  const HermitianMatrix hc = ctx.center(random_hermitian(rng, n));
  const double f2 = hc.matrix().squaredNorm();
  return std::max(0.0, ctx.rho().min_eigenvalue() * f2 - km_inner(ctx, hc, hc)) / f2;
}

// --- dual-geometries -----------------------------------------------------

double connection_duality(Rng& rng, int n) {
  const DensityMatrix rho = random_density(rng, n);
  const ExponentialArc arc(rho, random_hermitian(rng, n));
  const TangentFunctional chi(random_traceless(rng, n));
  return connection_duality_variation(arc, chi, kGrid);
}

// --- finite-submanifolds -------------------------------------------------

struct ModelInstance {
  SubmanifoldModel model;
  ThetaPoint theta;
};

ModelInstance random_model(Rng& rng, int n) {
  DensityMatrix rho = random_density(rng, n);
  const int m = std::min(3, n * n - 1);
  std::vector<HermitianMatrix> gens;
  for (int i = 0; i < m; ++i) gens.push_back(random_hermitian(rng, n));
  ThetaPoint theta{RVector(m)};
  for (int i = 0; i < m; ++i) theta.coords(i) = rng.uniform(-1.0, 1.0);
  return {SubmanifoldModel(std::move(rho), std::move(gens)), std::move(theta)};
}

/// Central differences of Phi against eta (step 1e-5) and against the
/// Kubo-Mori metric (step 1e-3).
double flat_derivatives(Rng& rng, int n) {
  const ModelInstance in = random_model(rng, n);
  const SubmanifoldModel& model = in.model;
  const int m = model.size();
  auto phi = [&](const RVector& th) { return potential_theta(model, ThetaPoint{th}); };
  const RVector eta = dual_coords(model, in.theta).coords;
  const Eigen::MatrixXd g = metric_at(model, in.theta);

  double worst = 0.0;
  const double dg = 1e-5;
  const double dh = 1e-3;
  for (int i = 0; i < m; ++i) {
    const RVector ei = RVector::Unit(m, i);
    const double grad = (phi(in.theta.coords + dg * ei) - phi(in.theta.coords - dg * ei)) / (2 * dg);
    worst = std::max(worst, std::abs(grad - eta(i)));
    for (int j = 0; j < m; ++j) {
      const RVector ej = RVector::Unit(m, j);
      const RVector& c = in.theta.coords;
      const double hess = (phi(c + dh * (ei + ej)) - phi(c + dh * (ei - ej)) -
                           phi(c - dh * (ei - ej)) + phi(c - dh * (ei + ej))) /
                          (4 * dh * dh);
      worst = std::max(worst, std::abs(hess - g(i, j)));
    }
  }
  return worst;
}

double newton_round_trip(Rng& rng, int n) {
  const ModelInstance in = random_model(rng, n);
  const ThetaPoint solved = solve_theta(in.model, dual_coords(in.model, in.theta));
  return (solved.coords - in.theta.coords).cwiseAbs().maxCoeff();
}

double scalar_benchmark(Rng&, int) {
  CMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  const SubmanifoldModel model(DensityMatrix::maximally_mixed(2), {HermitianMatrix(z)});
  const ThetaPoint theta = solve_theta(model, EtaPoint{RVector::Constant(1, 0.5)});
  return std::abs(theta.coords(0) - std::atanh(0.5));
}

// --- kms-condition -------------------------------------------------------

double kms(Rng& rng, int n) {
  const GnsSpace g(random_density(rng, n));
  const CMatrix x = random_operator(rng, n);
  const CMatrix y = random_operator(rng, n);
  return kms_boundary_check(g, x, y, rng.uniform(-2.0, 2.0));
}

// --- modular-operator ----------------------------------------------------

double tomita_suite(Rng& rng, int n) {
  const GnsSpace g(random_density(rng, n));
  const CMatrix x = random_operator(rng, n);
  const ConeVector& omega = g.omega();
  const ConeVector v{random_operator(rng, n)};
  const ConeVector x_omega = omega.left(x);

  const double j2 = max_abs((modular_conjugate(modular_conjugate(v)) - v).mat);
  const double fixed = max_abs((apply_modular_power(g, 1.0, omega) - omega).mat);
  const double flow_fixed =
      max_abs((apply_modular_power(g, Complex(0.0, 0.7), omega) - omega).mat);
  const double tomita = max_abs((apply_tomita(g, x_omega) - omega.left(x.adjoint())).mat);
  const double j_omega = max_abs((modular_conjugate(omega) - omega).mat);
  // Natural-cone vector x J x Omega.
  const ConeVector cone = modular_conjugate(x_omega).left(x);
  const double cone_fixed = max_abs((modular_conjugate(cone) - cone).mat);
  const double cone_member = cone_membership(g, cone, 0.25, 1e-10) ? 0.0 : 1.0;
  return std::max({j2, fixed, flow_fixed, tomita, j_omega, cone_fixed, cone_member});
}

/// S_{Phi,Psi} x Psi = x^* Phi, including x = 1.
double relative_tomita(Rng& rng, int n) {
  const RelativeModularOperator d(random_density(rng, n), random_density(rng, n));
  const CMatrix x = random_operator(rng, n);
  const ConeVector psi = d.psi();
  const ConeVector phi = d.phi();
  return std::max(max_abs((d.apply_tomita(psi.left(x)) - phi.left(x.adjoint())).mat),
                  max_abs((d.apply_tomita(psi) - phi).mat));
}

// --- majorized-states ----------------------------------------------------

double radon_nikodym(Rng& rng, int n) {
  const GnsSpace g(random_density(rng, n));
  const DensityMatrix sigma = random_density(rng, n);
  const ConeVector phi = vector_of_state(sigma);

  const CMatrix b = commutant_rn(g, phi);
  const CMatrix a = algebra_rn(g, phi);
  const double commutant_eq = max_abs((g.omega().right(b) - phi).mat);
  const double algebra_eq = max_abs((g.omega().left(a) - phi).mat);
  // a = J a' J with a' = right multiplication by b.
  const ConeVector probe{random_operator(rng, n)};
  const ConeVector jaj = modular_conjugate(modular_conjugate(probe).right(b));
  const double conj = max_abs((jaj - probe.left(a)).mat);

  const CMatrix x = random_operator(rng, n);
  const double state_eq = std::abs(g.state(a.adjoint() * x * a) - sigma.expectation(x));

  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(sigma.matrix(), g.rho().matrix());
  const double lambda = es.eigenvalues().maxCoeff();
  const double bound = majorization_bound(g, phi);
  const double b_norm = operator_norm(b);
  const double lam_err = std::max(std::abs(bound - lambda), std::abs(b_norm * b_norm - lambda)) /
                         lambda;
  return std::max({commutant_eq, algebra_eq, conj, state_eq, lam_err});
}

// --- approximate-tangents ------------------------------------------------

/// Reconstruction error of chi, relative to max(1, lambda), and of the
/// midpoint rho.
double tangent_split_check(Rng& rng, int n) {
  const GnsSpace g(random_density(rng, n));
  const TangentFunctional chi(random_traceless(rng, n));
  const TangentSplit split = tangent_split(g, chi);
  const CMatrix diff = split.lambda * (split.phi.matrix() - split.psi.matrix());
  const CMatrix mid = 0.5 * (split.phi.matrix() + split.psi.matrix());
  return std::max(max_abs(diff - chi.matrix().matrix()) / std::max(1.0, split.lambda),
                  max_abs(mid - g.rho().matrix()));
}

// --- registry ------------------------------------------------------------

struct CheckSpec {
  const char* anchor;
  const char* label;
  double tolerance;
  bool benchmark;  // deterministic single evaluation
  double (*trial)(Rng&, int);
};

constexpr std::array<CheckSpec, 28> kChecks = {{
    {"araki-entropy", "three-way", 1e-9, false, divergence_three_way},
    {"araki-entropy", "positivity", 1e-12, false, divergence_positivity},
    {"exponential-arcs", "definition", 1e-9, false, arc_definition},
    {"exponential-arcs", "pythagorean", 1e-9, false, pythagorean},
    {"scalar-potential", "a-energy-increasing", -1e-14, false, energy_increasing},
    {"scalar-potential", "b-increment", 1e-9, false, potential_increment},
    {"scalar-potential", "c-tangent-line", 1e-10, false, tangent_line},
    {"scalar-potential", "d-legendre", 1e-8, false, legendre_identity},
    {"matrix-case", "potential-log-partition", 1e-10, false, potential_is_log_partition},
    {"relative-hamiltonian", "derivative", 1e-6, false, theorem_derivative},
    {"relative-hamiltonian", "divergence-identity", 1e-9, false, theorem_identity},
    {"relative-hamiltonian", "initial-velocity", 1e-10, false, initial_velocity},
    {"relative-hamiltonian", "additivity", 1e-10, false, additivity},
    {"metric", "quadrature", 1e-10, false, metric_quadrature},
    {"metric", "eguchi", 1e-5, false, metric_eguchi},
    {"metric", "eguchi-order", 0.1, false, metric_eguchi_order},
    {"metric", "closed-form", 1e-10, true, metric_closed_form},
    {"metric", "nondegeneracy", 0.0, false, metric_nondegeneracy},
    {"metric", "lower-bound", 1e-12, false, metric_lower_bound},
    {"dual-geometries", "connection-duality", 1e-9, false, connection_duality},
    {"finite-submanifolds", "dual-flatness", 1e-5, false, flat_derivatives},
    {"finite-submanifolds", "newton-round-trip", 1e-9, false, newton_round_trip},
    {"finite-submanifolds", "scalar-benchmark", 1e-9, true, scalar_benchmark},
    {"kms-condition", "boundary", 1e-10, false, kms},
    {"modular-operator", "tomita-suite", 1e-10, false, tomita_suite},
    {"modular-operator", "relative-tomita", 1e-10, false, relative_tomita},
    {"majorized-states", "radon-nikodym", 1e-10, false, radon_nikodym},
    {"approximate-tangents", "split", 1e-10, false, tangent_split_check},
}};

std::vector<CheckSpec> all_checks() { return {kChecks.begin(), kChecks.end()}; }

std::string check_name(const CheckSpec& c) {
  return std::string(c.anchor) + ":" + c.label;
}

bool selected(const std::string& name, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(),
                     [&](const std::string& p) { return name.rfind(p, 0) == 0; });
}

struct TrialResult {
  double residual = 0.0;
  std::string error;
};

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& c : all_checks()) names.push_back(check_name(c));
  return names;
}

int default_thread_count() {
  if (const char* env = std::getenv("MODMAN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw PreconditionError("verify: trials must be positive");
  if (options.dims.empty()) throw PreconditionError("verify: no dimensions given");
  for (int n : options.dims) {
    if (n < 2 || n > 64) throw PreconditionError("verify: dimension must lie in [2, 64]");
  }
  if (options.tolerance && !(*options.tolerance > 0.0)) {
    throw PreconditionError("verify: tolerance must be positive");
  }

  std::vector<CheckSpec> checks;
  std::vector<std::size_t> ids;
  const std::vector<CheckSpec> registry = all_checks();
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (selected(check_name(registry[i]), options.only)) {
      checks.push_back(registry[i]);
      ids.push_back(i);
    }
  }

  // Flatten (check, trial) pairs; each owns a result slot.
  struct Job {
    std::size_t check;
    int trial;
  };
  std::vector<Job> jobs;
  std::vector<std::size_t> offset;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    offset.push_back(jobs.size());
    const int trials = checks[c].benchmark ? 1 : options.trials;
    for (int t = 0; t < trials; ++t) jobs.push_back({c, t});
  }
  std::vector<TrialResult> results(jobs.size());

  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    const int n = options.dims[static_cast<std::size_t>(job.trial) % options.dims.size()];
    Rng rng({options.seed, static_cast<std::uint64_t>(ids[job.check]),
             static_cast<std::uint64_t>(job.trial)});
    try {
      const double r = checks[job.check].trial(rng, n);
      results[j].residual = std::isnan(r) ? kInf : r;
    } catch (const std::exception& e) {
      results[j].residual = kInf;
      results[j].error = e.what();
    }
  };

  const int threads = std::max(
      1, std::min<int>(options.threads > 0 ? options.threads : default_thread_count(),
                       static_cast<int>(jobs.size())));
  if (threads == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(j);
      });
    }
    for (auto& t : pool) t.join();
  }

  VerifyReport report;
  report.generator = Rng::kGeneratorName;
  report.seed = options.seed;
  report.dims = options.dims;
  report.trials = options.trials;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    const std::size_t end = c + 1 < checks.size() ? offset[c + 1] : jobs.size();
    CheckRecord rec;
    rec.name = check_name(checks[c]);
    rec.anchor = checks[c].anchor;
    rec.trials = static_cast<int>(end - offset[c]);
    rec.tolerance = options.tolerance ? *options.tolerance : checks[c].tolerance;
    for (std::size_t j = offset[c]; j < end; ++j) {
      rec.max_residual = j == offset[c] ? results[j].residual
                                        : std::max(rec.max_residual, results[j].residual);
      if (rec.error.empty() && !results[j].error.empty()) rec.error = results[j].error;
    }
    rec.pass = rec.max_residual <= rec.tolerance;
    report.checks.push_back(std::move(rec));
  }
  return report;
}

Json report_to_json(const VerifyReport& report) {
  Json out;
  out["generator"] = report.generator;
  out["seed"] = report.seed;
  out["dims"] = report.dims;
  out["trials"] = report.trials;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["trials"] = c.trials;
    if (std::isfinite(c.max_residual)) {
      j["max_residual"] = c.max_residual;
    } else {
      j["max_residual"] = "inf";
    }
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (!c.error.empty()) j["error"] = c.error;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["pass"] = report.all_pass();
  return out;
}

void write_report_csv(std::ostream& out, const VerifyReport& report) {
  out << "name,anchor,trials,max_residual,tolerance,pass\n";
  for (const auto& c : report.checks) {
    out << c.name << ',' << c.anchor << ',' << c.trials << ','
        << format_number(c.max_residual) << ',' << format_number(c.tolerance) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
}

}  // namespace modman
