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

// modman: command-line front end.
//
//   modman divergence --sigma s.json --tau t.json
//   modman arc --rho r.json --generator h.json --points 11
//   modman metric --rho r.json --h h.json --k k.json
//   modman model --model m.json [--theta 0.1,0.2]
//   modman solve --model m.json --eta 0.5
//   modman geodesic --model m.json --theta-a 0,0 --theta-b 1,0 [--kind m]
//   modman kms --rho r.json --x x.json --y y.json --t 0.3
//   modman verify --dim 4 --seed 7 --trials 50
//
// Matrix inputs that are not given are drawn at random from --dim/--seed.
// Exit status: 0 success, 1 verify failure, 2 input or numeric error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modman/arcs.hpp"
#include "modman/divergence.hpp"
#include "modman/io.hpp"
#include "modman/km_metric.hpp"
#include "modman/random.hpp"
#include "modman/standard_form.hpp"
#include "modman/submanifold.hpp"
#include "modman/verify.hpp"

namespace {

using namespace modman;

struct JobConfig {
  std::string command;
  int dim = 4;
  std::uint64_t seed = 7;
  int trials = 100;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";

  // Inputs; empty means "draw at random".
  std::string sigma, tau, rho, generator, h, k, x, y, model;
  std::string theta, theta_a, theta_b, eta;
  std::string kind = "e";
  double t = 0.0;
  double step = 1e-3;
  double t_min = 0.0;
  double t_max = 1.0;
  int points = 11;
};

/// Emitted result: either a JSON object of scalars/arrays or a (t, quantity)
/// table.
struct Result {
  Json json;
  std::vector<TableRow> table;
  bool tabular = false;
};

RVector parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": cannot parse '" + item + "'");
    }
  }
  if (values.empty()) throw InputError(std::string(what) + ": empty list");
  return Eigen::Map<RVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// Each random input gets its own stream, keyed by a fixed salt.
DensityMatrix density_or_random(const std::string& path, const JobConfig& cfg,
                                std::uint64_t salt) {
  if (!path.empty()) return density_from_json(read_json_file(path));
  Rng rng({cfg.seed, salt});
  return random_density(rng, cfg.dim);
}

HermitianMatrix hermitian_or_random(const std::string& path, const JobConfig& cfg,
                                    std::uint64_t salt) {
  if (!path.empty()) return hermitian_from_json(read_json_file(path));
  Rng rng({cfg.seed, salt});
  return random_hermitian(rng, cfg.dim);
}

CMatrix operator_or_random(const std::string& path, const JobConfig& cfg,
                           std::uint64_t salt) {
  if (!path.empty()) return matrix_from_json(read_json_file(path));
  Rng rng({cfg.seed, salt});
  return random_operator(rng, cfg.dim);
}

SubmanifoldModel model_or_random(const JobConfig& cfg) {
  if (!cfg.model.empty()) return model_from_json(read_json_file(cfg.model));
  Rng rng({cfg.seed, 100});
  DensityMatrix rho = random_density(rng, cfg.dim);
  std::vector<HermitianMatrix> gens;
  for (int i = 0; i < 2; ++i) gens.push_back(random_hermitian(rng, cfg.dim));
  return SubmanifoldModel(std::move(rho), std::move(gens));
}

ThetaPoint theta_or_zero(const std::string& text, const SubmanifoldModel& model,
                         const char* what) {
  if (text.empty()) return ThetaPoint{RVector::Zero(model.size())};
  return ThetaPoint{parse_list(text, what)};
}

std::vector<double> grid(const JobConfig& cfg) {
  if (cfg.points < 2) throw InputError("--points must be at least 2");
  std::vector<double> ts;
  for (int i = 0; i < cfg.points; ++i) {
    ts.push_back(cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.points - 1));
  }
  return ts;
}

Result run_divergence(const JobConfig& cfg) {
  const DensityMatrix sigma = density_or_random(cfg.sigma, cfg, 1);
  const DensityMatrix tau = density_or_random(cfg.tau, cfg, 2);
  if (sigma.dim() != tau.dim()) throw InputError("sigma and tau differ in size");
  Result r;
  r.json["araki"] = araki_divergence(sigma, tau);
  r.json["umegaki"] = umegaki_divergence(sigma, tau);
  r.json["dual_form"] = araki_dual_form(sigma, tau);
  return r;
}

Result run_arc(const JobConfig& cfg) {
  const DensityMatrix rho = density_or_random(cfg.rho, cfg, 1);
  const ExponentialArc arc(rho, hermitian_or_random(cfg.generator, cfg, 3));
  Result r;
  r.tabular = true;
  for (double t : grid(cfg)) {
    const DensityMatrix gt = arc_point(arc, t);
    r.table.push_back({t, "zeta", log_partition(arc, t)});
    r.table.push_back({t, "energy", arc.energy(gt)});
    r.table.push_back({t, "divergence_from_rho", umegaki_divergence(rho, gt)});
  }
  return r;
}

Result run_metric(const JobConfig& cfg) {
  const MetricContext ctx(density_or_random(cfg.rho, cfg, 1));
  const HermitianMatrix h = hermitian_or_random(cfg.h, cfg, 3);
  const HermitianMatrix k = hermitian_or_random(cfg.k, cfg, 4);
  Result r;
  r.json["km_inner"] = km_inner(ctx, h, k);
  r.json["t_operator"] = km_inner_t_operator(ctx, h, k);
  r.json["eguchi"] = eguchi_fd_inner(ctx, h, k, cfg.step);
  r.json["step"] = cfg.step;
  return r;
}

Result run_model(const JobConfig& cfg) {
  const SubmanifoldModel model = model_or_random(cfg);
  const ThetaPoint theta = theta_or_zero(cfg.theta, model, "--theta");
  const Eigen::MatrixXd g = metric_at(model, theta);
  Result r;
  r.json["dim"] = model.dim();
  r.json["size"] = model.size();
  r.json["theta"] = vector_to_json(theta.coords);
  r.json["eta"] = vector_to_json(dual_coords(model, theta).coords);
  r.json["potential"] = potential_theta(model, theta);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) rows.push_back(vector_to_json(g.row(i).transpose()));
  r.json["metric"] = std::move(rows);
  r.json["state"] = matrix_to_json(state_at(model, theta).matrix());
  return r;
}

Result run_solve(const JobConfig& cfg) {
  const SubmanifoldModel model = model_or_random(cfg);
  if (cfg.eta.empty()) throw InputError("solve: --eta is required");
  const EtaPoint eta{parse_list(cfg.eta, "--eta")};
  SolveOptions options;
  if (cfg.tol) {
    options.tolerance = *cfg.tol;
    options.accept = std::max(options.accept, *cfg.tol);
  }
  const ThetaPoint theta = solve_theta(model, eta, options);
  Result r;
  r.json["theta"] = vector_to_json(theta.coords);
  r.json["eta_residual"] =
      (dual_coords(model, theta).coords - eta.coords).cwiseAbs().maxCoeff();
  return r;
}

Result run_geodesic(const JobConfig& cfg) {
  const SubmanifoldModel model = model_or_random(cfg);
  const ThetaPoint a = theta_or_zero(cfg.theta_a, model, "--theta-a");
  const ThetaPoint b = theta_or_zero(cfg.theta_b, model, "--theta-b");
  if (cfg.kind != "e" && cfg.kind != "m") throw InputError("--kind must be e or m");
  const DensityMatrix start = state_at(model, a);
  const DensityMatrix end = state_at(model, b);
  Result r;
  r.tabular = true;
  for (double t : grid(cfg)) {
    const DensityMatrix s =
        cfg.kind == "e" ? e_geodesic(model, a, b, t) : m_geodesic(start, end, t);
    for (int i = 0; i < model.size(); ++i) {
      r.table.push_back({t, "eta" + std::to_string(i),
                         s.expectation(model.generators()[static_cast<std::size_t>(i)])});
    }
    r.table.push_back({t, "divergence_from_start", umegaki_divergence(start, s)});
  }
  return r;
}

Result run_kms(const JobConfig& cfg) {
  const GnsSpace g(density_or_random(cfg.rho, cfg, 1));
  const CMatrix x = operator_or_random(cfg.x, cfg, 5);
  const CMatrix y = operator_or_random(cfg.y, cfg, 6);
  if (x.rows() != g.dim() || y.rows() != g.dim()) throw InputError("x, y and rho differ in size");
  Result r;
  r.json["t"] = cfg.t;
  r.json["residual"] = kms_boundary_check(g, x, y, cfg.t);
  return r;
}

void emit(const Result& r, const JobConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    if (r.tabular) {
      write_csv(out, r.table);
    } else {
      out << "quantity,value\n";
      for (const auto& [key, value] : r.json.items()) out << key << ',' << value.dump() << '\n';
    }
  } else {
    out << (r.tabular ? table_to_json(r.table) : r.json).dump(2) << '\n';
  }
}

template <typename Fn>
void with_output(const JobConfig& cfg, Fn&& fn) {
  if (cfg.out.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw InputError("cannot write " + cfg.out);
  fn(file);
}

int run(const JobConfig& cfg) {
  if (cfg.command == "verify") {
    VerifyOptions options;
    options.seed = cfg.seed;
    options.trials = cfg.trials;
    options.dims = {cfg.dim};
    options.tolerance = cfg.tol;
    const VerifyReport report = run_verification(options);
    with_output(cfg, [&](std::ostream& out) {
      if (cfg.format == "csv") {
        write_report_csv(out, report);
      } else {
        out << report_to_json(report).dump(2) << '\n';
      }
    });
    return report.all_pass() ? 0 : 1;
  }

  Result r;
  if (cfg.command == "divergence") r = run_divergence(cfg);
  else if (cfg.command == "arc") r = run_arc(cfg);
  else if (cfg.command == "metric") r = run_metric(cfg);
  else if (cfg.command == "model") r = run_model(cfg);
  else if (cfg.command == "solve") r = run_solve(cfg);
  else if (cfg.command == "geodesic") r = run_geodesic(cfg);
  else if (cfg.command == "kms") r = run_kms(cfg);
  with_output(cfg, [&](std::ostream& out) { emit(r, cfg, out); });
  return 0;
}

void add_common(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--dim", cfg.dim, "Matrix size for random inputs")->check(CLI::Range(2, 64));
  sub->add_option("--seed", cfg.seed, "Seed of the random generator");
  sub->add_option("--tol", cfg.tol, "Tolerance override")->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out, "Write the result to this file");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_grid(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--t-min", cfg.t_min, "First grid point");
  sub->add_option("--t-max", cfg.t_max, "Last grid point");
  sub->add_option("--points", cfg.points, "Number of grid points");
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  CLI::App app{"Finite-dimensional quantum information geometry"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* div = app.add_subcommand("divergence", "Araki, Umegaki and dual-form relative entropy");
  div->add_option("--sigma", cfg.sigma, "First state (JSON matrix)");
  div->add_option("--tau", cfg.tau, "Second state (JSON matrix)");

  auto* arc = app.add_subcommand("arc", "Table of an exponential arc");
  arc->add_option("--rho", cfg.rho, "Base state");
  arc->add_option("--generator", cfg.generator, "Generator h");
  add_grid(arc, cfg);

  auto* met = app.add_subcommand("metric", "Kubo-Mori scalar product of h and k at rho");
  met->add_option("--rho", cfg.rho, "Base state");
  met->add_option("--h", cfg.h, "First generator");
  met->add_option("--k", cfg.k, "Second generator");
  met->add_option("--step", cfg.step, "Finite-difference step of the Eguchi form");

  auto* mod = app.add_subcommand("model", "Coordinates, potential and metric of a model");
  mod->add_option("--model", cfg.model, "Model JSON");
  mod->add_option("--theta", cfg.theta, "Natural coordinates, comma separated");

  auto* sol = app.add_subcommand("solve", "Natural coordinates for given expectations");
  sol->add_option("--model", cfg.model, "Model JSON");
  sol->add_option("--eta", cfg.eta, "Expectation coordinates, comma separated");

  auto* geo = app.add_subcommand("geodesic", "Table along an e- or m-geodesic");
  geo->add_option("--model", cfg.model, "Model JSON");
  geo->add_option("--theta-a", cfg.theta_a, "Start point");
  geo->add_option("--theta-b", cfg.theta_b, "End point");
  geo->add_option("--kind", cfg.kind, "e (exponential) or m (mixture)");
  add_grid(geo, cfg);

  auto* kms = app.add_subcommand("kms", "KMS boundary residual");
  kms->add_option("--rho", cfg.rho, "State");
  kms->add_option("--x", cfg.x, "First operator");
  kms->add_option("--y", cfg.y, "Second operator");
  kms->add_option("--t", cfg.t, "Real time");

  auto* ver = app.add_subcommand("verify", "Run the property suite");
  ver->add_option("--trials", cfg.trials, "Trials per check")->check(CLI::PositiveNumber);

  for (auto* sub : {div, arc, met, mod, sol, geo, kms, ver}) add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run(cfg);
  } catch (const modman::Error& e) {
    std::cerr << "modman: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "modman: " << e.what() << '\n';
    return 2;
  }
}
