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

// Acceptance gate: runs the property suite at n = 2..8 with 100 seeded
// trials on one thread and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "modman/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  std::vector<std::string> checks;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "Araki, Umegaki and dual form agree", {"araki-entropy:three-way"}},
      {2, "exponential-arc definition", {"exponential-arcs:definition"}},
      {3,
       "scalar potential: energy increasing, tangent line, Legendre identity",
       {"scalar-potential:a-energy-increasing", "scalar-potential:c-tangent-line",
        "scalar-potential:d-legendre"}},
      {4, "potential equals log partition", {"matrix-case:potential-log-partition"}},
      {5,
       "metric: quadrature, Eguchi, second-order convergence, closed form",
       {"metric:quadrature", "metric:eguchi", "metric:eguchi-order", "metric:closed-form"}},
      {6, "divergence derivative along the arc", {"relative-hamiltonian:derivative"}},
      {7, "generator additivity", {"relative-hamiltonian:additivity"}},
      {8, "KMS boundary condition", {"kms-condition:boundary"}},
      {9, "Tomita identities", {"modular-operator:tomita-suite"}},
      {10, "Radon-Nikodym correspondence", {"majorized-states:radon-nikodym"}},
      {11,
       "dual flatness, Newton round trip, scalar benchmark",
       {"finite-submanifolds:dual-flatness", "finite-submanifolds:newton-round-trip",
        "finite-submanifolds:scalar-benchmark"}},
      {12, "Pythagorean relation at equal energy", {"exponential-arcs:pythagorean"}},
      {13, "metric non-degeneracy", {"metric:nondegeneracy"}},
  };
  return list;
}

}  // namespace

int main() {
  modman::VerifyOptions options;
  options.seed = 7;
  options.trials = 100;
  options.dims = {2, 3, 4, 5, 6, 7, 8};
  options.threads = 1;

  const auto start = std::chrono::steady_clock::now();
  const modman::VerifyReport report = modman::run_verification(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  for (const Criterion& c : criteria()) {
    bool pass = true;
    std::string detail;
    for (const std::string& name : c.checks) {
      const modman::CheckRecord* rec = report.find(name);
      char buf[256];
      if (rec == nullptr) {
        pass = false;
        std::snprintf(buf, sizeof buf, " [%s missing]", name.c_str());
      } else {
        pass = pass && rec->pass;
        std::snprintf(buf, sizeof buf, " [%s %.3g <= %.3g%s%s]", name.c_str(), rec->max_residual,
                      rec->tolerance, rec->error.empty() ? "" : " error: ", rec->error.c_str());
      }
      detail += buf;
    }
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s%s\n", pass ? "PASS" : "FAIL", c.number, c.title,
                detail.c_str());
  }
  std::printf("%d of %zu criteria passed (seed %llu, %d trials, n = 2..8, %.2f s)\n",
              static_cast<int>(criteria().size()) - failed, criteria().size(),
              static_cast<unsigned long long>(options.seed), options.trials, seconds);
  return failed == 0 ? 0 : 1;
}
