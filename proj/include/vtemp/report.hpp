// Copyright 2026 The vtemp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reports assembled by the command-line front-end, with their JSON and
// human-readable renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtemp/activation.hpp"
#include "vtemp/io.hpp"
#include "vtemp/oracle.hpp"

namespace vtemp::report {

struct AnalysisReport {
  std::size_t dim = 0;
  std::optional<std::string> label;
  double mean_energy = 0.0;
  std::vector<Transition> transitions;
  bool passive = false;
  bool completely_passive = false;
  double ergotropy = 0.0;
  std::optional<ActivationCertificate> certificate;
};

AnalysisReport analyze(const DiagonalSystem& sys, double tol = kBetaEqualityTolerance);
io::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

struct ActivationReport {
  std::optional<ActivationCertificate> certificate;
  std::optional<oracle::ExhaustiveSearch> exhaustive;
};

/// With `exhaustive`, also scans tensor powers up to `max_copies` copies.
ActivationReport activate(const DiagonalSystem& sys, double tol, bool exhaustive, std::size_t max_copies);
io::json to_json(const ActivationReport& r);
std::string to_text(const ActivationReport& r);

enum class CheckStatus { kPass, kFail, kSkipped };

struct OracleCheck {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string detail;
};

/// Cross-checks the closed-form results for `sys` against the brute-force
/// oracles.
std::vector<OracleCheck> oracle_checks(const DiagonalSystem& sys, double tol, std::uint64_t seed);
io::json to_json(const std::vector<OracleCheck>& checks);
std::string to_text(const std::vector<OracleCheck>& checks);

/// 6 significant digits, as used by every human-readable report.
std::string format_number(double x);

}  // namespace vtemp::report
