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

#ifndef MODMAN_VERIFY_HPP
#define MODMAN_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "modman/io.hpp"

namespace modman {

/// Outcome of one property check over all of its trials.
struct CheckRecord {
  std::string name;     // "<anchor>:<label>"
  std::string anchor;
  int trials = 0;
  double max_residual = 0.0;  // +inf if some trial threw
  double tolerance = 0.0;
  bool pass = false;           // max_residual <= tolerance
  std::string error;           // first exception message, if any
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  int trials = 100;
  /// Trial i runs at dimension dims[i % dims.size()].
  std::vector<int> dims = {4};
  /// Replaces every check tolerance when set.
  std::optional<double> tolerance;
  /// Worker threads; 0 reads MODMAN_THREADS, falling back to the hardware.
  int threads = 0;
  /// Restricts the run to checks whose name starts with one of these.
  std::vector<std::string> only;
};

struct VerifyReport {
  std::string generator;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int trials = 0;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  const CheckRecord* find(const std::string& name) const;
};

/// Names of every registered check, in report order.
std::vector<std::string> verify_check_names();

/// Runs the property suite. Results depend only on the options, never on
/// thread scheduling.
VerifyReport run_verification(const VerifyOptions& options);

Json report_to_json(const VerifyReport& report);
/// "name,anchor,trials,max_residual,tolerance,pass" rows.
void write_report_csv(std::ostream& out, const VerifyReport& report);

/// Value of MODMAN_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_thread_count();

}  // namespace modman

#endif  // MODMAN_VERIFY_HPP
