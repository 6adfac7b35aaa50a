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

// vtemp: passivity, virtual temperatures and multi-copy activation of
// diagonal quantum states.
//
// Exit codes: 0 result produced, 1 empty result (no certificate, or a failed
// oracle check), 2 input or validation error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vtemp/io.hpp"
#include "vtemp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct GlobalFlags {
  bool json = false;
  double tol = vtemp::kBetaEqualityTolerance;
  std::uint64_t seed = 1;
  std::size_t max_copies = 12;
  bool exhaustive = false;
};

int exit_code_for(const vtemp::Error& e) { return e.code() == vtemp::Errc::kIoError ? kExitIo : kExitInput; }

std::vector<double> load_energies(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw vtemp::Error(vtemp::Errc::kIoError, "cannot open " + path);
    in = &file;
  }
  vtemp::io::json j;
  try {
    j = vtemp::io::json::parse(*in);
  } catch (const vtemp::io::json::parse_error& e) {
    throw vtemp::Error(vtemp::Errc::kParseError, e.what());
  }
  if (j.is_object() && j.contains("energies")) j = j.at("energies");
  if (!j.is_array()) throw vtemp::Error(vtemp::Errc::kParseError, "expected an array of energies");
  std::vector<double> energies;
  for (const auto& v : j) {
    if (!v.is_number()) throw vtemp::Error(vtemp::Errc::kParseError, "energies must be numbers");
    energies.push_back(v.get<double>());
  }
  return energies;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Passivity, virtual temperatures and activation certificates for diagonal states"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--tol", flags.tol, "Relative tolerance for equal virtual temperatures")->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "Seed for sampled oracle checks");
  app.add_option("--max-copies", flags.max_copies, "Largest copy count for the exhaustive scan")
      ->check(CLI::PositiveNumber);
  app.add_flag("--exhaustive", flags.exhaustive, "Also find the true minimal copy number by tensor-power search");

  std::string state_path;
  auto* analyze = app.add_subcommand("analyze", "Virtual temperatures, passivity flags and ergotropy");
  analyze->add_option("state", state_path, "State file, or - for standard input")->required();

  auto* activate = app.add_subcommand("activate", "Construct a multi-copy activation certificate");
  activate->add_option("state", state_path, "State file, or - for standard input")->required();

  std::vector<double> energies;
  std::string energies_file;
  double beta = 0.0;
  std::string out_path = "-";
  std::string label;
  auto* gibbs = app.add_subcommand("gibbs", "Write the Gibbs state of a Hamiltonian");
  auto* inline_energies = gibbs->add_option("--energies", energies, "Comma-separated energies")->delimiter(',');
  auto* file_energies = gibbs->add_option("--energies-file", energies_file, "JSON array or state file of energies");
  inline_energies->excludes(file_energies);
  gibbs->add_option("--beta", beta, "Inverse temperature")->required();
  gibbs->add_option("--out,-o", out_path, "Output path, or - for standard output");
  gibbs->add_option("--label", label, "Label stored in the state file");

  std::string second_path;
  auto* compose = app.add_subcommand("compose", "Write the tensor product of two states");
  compose->add_option("first", state_path, "First state file")->required();
  compose->add_option("second", second_path, "Second state file")->required();
  compose->add_option("--out,-o", out_path, "Output path, or - for standard output");

  auto* check = app.add_subcommand("oracle-check", "Run the brute-force oracle checks on a state");
  check->add_option("state", state_path, "State file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) {
      const auto r = vtemp::report::analyze(vtemp::io::load_state(state_path), flags.tol);
      std::cout << (flags.json ? vtemp::io::dump(vtemp::report::to_json(r)) : vtemp::report::to_text(r));
      return kExitOk;
    }
    if (activate->parsed()) {
      const auto sys = vtemp::io::load_state(state_path);
      vtemp::report::ActivationReport r;
      try {
        r = vtemp::report::activate(sys, flags.tol, flags.exhaustive, flags.max_copies);
      } catch (const vtemp::Error& e) {
        if (e.code() != vtemp::Errc::kIntervalTooNarrow) throw;
        std::cerr << "vtemp: " << e.what() << "\n";
        return kExitEmpty;
      }
      std::cout << (flags.json ? vtemp::io::dump(vtemp::report::to_json(r)) : vtemp::report::to_text(r));
      return r.certificate ? kExitOk : kExitEmpty;
    }
    if (gibbs->parsed()) {
      if (file_energies->count() > 0) energies = load_energies(energies_file);
      if (energies.empty()) throw vtemp::Error(vtemp::Errc::kEmptySystem, "no energies given");
      const auto sys = vtemp::gibbs_state(energies, beta,
                                          label.empty() ? std::nullopt : std::optional<std::string>(label));
      vtemp::io::write_text(out_path, vtemp::io::dump(vtemp::io::state_to_json(sys)));
      return kExitOk;
    }
    if (compose->parsed()) {
      const auto a = vtemp::io::load_state(state_path);
      const auto b = second_path == state_path ? a : vtemp::io::load_state(second_path);
      const auto product = vtemp::compose_systems(a, b);
      vtemp::io::write_text(out_path, vtemp::io::dump(vtemp::io::state_to_json(product)));
      return kExitOk;
    }
    if (check->parsed()) {
      const auto checks = vtemp::report::oracle_checks(vtemp::io::load_state(state_path), flags.tol, flags.seed);
      std::cout << (flags.json ? vtemp::io::dump(vtemp::report::to_json(checks)) : vtemp::report::to_text(checks));
      for (const auto& c : checks) {
        if (c.status == vtemp::report::CheckStatus::kFail) return kExitEmpty;
      }
      return kExitOk;
    }
  } catch (const vtemp::Error& e) {
    std::cerr << "vtemp: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitInput;
}
