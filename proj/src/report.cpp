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

#include "vtemp/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vtemp/passivity.hpp"

namespace vtemp::report {

namespace {

std::string format_beta(VirtualTemp beta) {
  if (beta.is_finite()) return format_number(beta.value());
  return beta.value() > 0 ? "+inf" : "-inf";
}

std::string levels_text(const std::vector<std::size_t>& levels) {
  std::ostringstream out;
  out << "|";
  for (std::size_t i = 0; i < levels.size(); ++i) out << (i ? " " : "") << levels[i];
  out << ">";
  return out.str();
}

void certificate_text(std::ostringstream& out, const ActivationCertificate& c) {
  const CompositeTransition& m = c.composite;
  out << "certificate:\n";
  out << "  cold transition: " << m.base_cold.hi << " -> " << m.base_cold.lo
      << "  (beta_v " << format_beta(m.base_cold.beta) << ", gap " << format_number(m.base_cold.gap) << ")\n";
  out << "  hot transition:  " << m.base_hot.hi << " -> " << m.base_hot.lo
      << "  (beta_v " << format_beta(m.base_hot.beta) << ", gap " << format_number(m.base_hot.gap) << ")\n";
  out << "  copies: n=" << m.n << " k=" << m.k << " total=" << c.total_copies << "\n";
  out << "  composite gap: " << format_number(m.gap) << "\n";
  out << "  composite beta_v: " << format_beta(m.beta) << "\n";
  out << "  swap " << levels_text(c.swap_level_hi) << " <-> " << levels_text(c.swap_level_lo) << "\n";
  out << "  work: " << format_number(c.work) << "\n";
}

bool close_relative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::string format_number(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

AnalysisReport analyze(const DiagonalSystem& sys, double tol) {
  AnalysisReport r;
  r.dim = sys.dim();
  r.label = sys.label();
  r.mean_energy = mean_energy(sys);
  r.transitions = all_transitions(sys);
  r.passive = is_passive(sys);
  r.completely_passive = is_completely_passive(sys, tol);
  r.ergotropy = ergotropy(sys);
  ActivationOptions options;
  options.beta_tolerance = tol;
  try {
    r.certificate = activation_certificate(sys, options);
  } catch (const Error& e) {
    if (e.code() != Errc::kIntervalTooNarrow) throw;
  }
  return r;
}

io::json to_json(const AnalysisReport& r) {
  io::json j = io::json::object();
  j["system"] = {{"dim", r.dim}, {"mean_energy", r.mean_energy}};
  j["system"]["label"] = r.label ? io::json(*r.label) : io::json(nullptr);
  io::json rows = io::json::array();
  for (const Transition& t : r.transitions) {
    rows.push_back({{"hi", t.hi}, {"lo", t.lo}, {"gap", t.gap}, {"beta_v", io::virtual_temp_to_json(t.beta)}});
  }
  j["transitions"] = std::move(rows);
  j["passive"] = r.passive;
  j["completely_passive"] = r.completely_passive;
  j["ergotropy"] = r.ergotropy;
  j["certificate"] = r.certificate ? io::certificate_to_json(*r.certificate) : io::json(nullptr);
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "system: d=" << r.dim;
  if (r.label) out << " label=\"" << *r.label << "\"";
  out << " mean_energy=" << format_number(r.mean_energy) << "\n";
  out << "transitions (" << r.transitions.size() << "):\n";
  for (const Transition& t : r.transitions) {
    out << "  " << t.hi << " -> " << t.lo << "  gap " << format_number(t.gap) << "  beta_v "
        << format_beta(t.beta) << "\n";
  }
  out << "passive: " << (r.passive ? "true" : "false") << "\n";
  out << "completely_passive: " << (r.completely_passive ? "true" : "false") << "\n";
  out << "ergotropy: " << format_number(r.ergotropy) << "\n";
  if (r.certificate) certificate_text(out, *r.certificate);
  return out.str();
}

ActivationReport activate(const DiagonalSystem& sys, double tol, bool exhaustive, std::size_t max_copies) {
  ActivationReport r;
  ActivationOptions options;
  options.beta_tolerance = tol;
  r.certificate = activation_certificate(sys, options);
  if (exhaustive) r.exhaustive = oracle::minimal_activating_copies(sys, max_copies);
  return r;
}

io::json to_json(const ActivationReport& r) {
  io::json j = io::json::object();
  j["certificate"] = r.certificate ? io::certificate_to_json(*r.certificate) : io::json(nullptr);
  if (r.exhaustive) {
    j["exhaustive"] = {{"scanned_up_to", r.exhaustive->scanned_up_to}};
    j["exhaustive"]["minimal_copies"] =
        r.exhaustive->minimal_copies ? io::json(*r.exhaustive->minimal_copies) : io::json(nullptr);
  }
  return j;
}

std::string to_text(const ActivationReport& r) {
  std::ostringstream out;
  if (r.certificate) {
    certificate_text(out, *r.certificate);
  } else {
    out << "none\n";
  }
  if (r.exhaustive) {
    out << "exhaustive minimum: ";
    if (r.exhaustive->minimal_copies) {
      out << *r.exhaustive->minimal_copies << " copies";
    } else {
      out << "none";
    }
    out << " (scanned up to " << r.exhaustive->scanned_up_to << " copies)\n";
  }
  return out.str();
}

std::vector<OracleCheck> oracle_checks(const DiagonalSystem& sys, double tol, std::uint64_t seed) {
  std::vector<OracleCheck> checks;
  const bool small = sys.dim() <= oracle::kMaxBruteForceDim;
  std::optional<oracle::BruteForceResult> brute;
  if (small) brute = oracle::brute_force_ergotropy(sys);

  {
    OracleCheck c{"ergotropy_vs_brute_force", CheckStatus::kSkipped, "d > 8"};
    if (brute) {
      const double sorted = ergotropy(sys);
      const bool ok = close_relative(sorted, brute->work, 1e-12);
      c = {c.name, ok ? CheckStatus::kPass : CheckStatus::kFail,
           "sorted " + format_number(sorted) + " vs brute force " + format_number(brute->work)};
    }
    checks.push_back(c);
  }
  {
    const bool by_order = is_passive(sys);
    bool by_beta = true;
    for (const Transition& t : all_transitions(sys)) by_beta = by_beta && t.beta.value() >= 0.0;
    OracleCheck c{"passivity_criteria_agree", CheckStatus::kPass, ""};
    c.detail = std::string("ordering ") + (by_order ? "passive" : "active") + ", virtual temperatures " +
               (by_beta ? "passive" : "active");
    bool ok = by_order == by_beta;
    if (brute) {
      const bool by_permutation = brute->work <= 1e-12 * std::max(1.0, std::abs(mean_energy(sys)));
      c.detail += std::string(", permutations ") + (by_permutation ? "passive" : "active");
      ok = ok && by_order == by_permutation;
    }
    c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
    checks.push_back(c);
  }
  {
    OracleCheck c{"birkhoff_vertex_minimum", CheckStatus::kSkipped, "d > 8"};
    if (brute) {
      const double minimum = mean_energy(sys) - brute->work;
      const double slack = 1e-12 * std::max(1.0, std::abs(minimum));
      oracle::SplitMix64 rng(seed);
      std::size_t violations = 0;
      constexpr std::size_t kSamples = 200;
      for (std::size_t i = 0; i < kSamples; ++i) {
        const auto s = oracle::sample_doubly_stochastic(sys.dim(), 1 + rng.below(12), rng.next());
        if (oracle::energy_under_stochastic(sys, s) < minimum - slack) ++violations;
      }
      // The argmin permutation, in image form, must attain the minimum.
      std::vector<std::size_t> image(sys.dim());
      for (std::size_t k = 0; k < sys.dim(); ++k) image[brute->permutation[k]] = k;
      const oracle::StochasticMatrix vertex(sys.dim(), {{1.0, image}});
      const bool attained = close_relative(oracle::energy_under_stochastic(sys, vertex), minimum, 1e-12);
      c = {c.name, violations == 0 && attained ? CheckStatus::kPass : CheckStatus::kFail,
           std::to_string(kSamples) + " samples, " + std::to_string(violations) + " below the vertex minimum" +
               (attained ? "" : ", minimum not attained")};
    }
    checks.push_back(c);
  }
  {
    OracleCheck c{"certificate_tensor_power", CheckStatus::kSkipped, "no certificate"};
    ActivationOptions options;
    options.beta_tolerance = tol;
    std::optional<ActivationCertificate> cert;
    try {
      cert = activation_certificate(sys, options);
    } catch (const Error& e) {
      if (e.code() != Errc::kIntervalTooNarrow) throw;
      c.detail = e.what();
    }
    if (cert) {
      try {
        const DiagonalSystem power = oracle::tensor_power(sys, cert->total_copies);
        const std::size_t hi = tensor_index(cert->swap_level_hi, sys.dim());
        const std::size_t lo = tensor_index(cert->swap_level_lo, sys.dim());
        const bool inverted = oracle::is_inverted(power, hi, lo);
        const double work = apply_swap(power, hi, lo).second;
        const bool same_work = std::abs(work - cert->work) <= 1e-9 * std::abs(cert->work);
        c = {c.name, inverted && same_work ? CheckStatus::kPass : CheckStatus::kFail,
             std::to_string(cert->total_copies) + " copies, swap work " + format_number(work) + " vs certificate " +
                 format_number(cert->work)};
      } catch (const Error& e) {
        if (e.code() != Errc::kDimensionCap) throw;
        c.detail = "tensor power exceeds the dimension cap";
      }
    }
    checks.push_back(c);
  }
  {
    OracleCheck c{"completely_passive_closure", CheckStatus::kSkipped, "not completely passive"};
    if (is_completely_passive(sys, tol)) {
      const auto search = oracle::minimal_activating_copies(sys, 4);
      c = {c.name, search.minimal_copies ? CheckStatus::kFail : CheckStatus::kPass,
           "no inversion up to " + std::to_string(search.scanned_up_to) + " copies"};
      if (search.minimal_copies) c.detail = "inversion at " + std::to_string(*search.minimal_copies) + " copies";
    }
    checks.push_back(c);
  }
  return checks;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

}  // namespace

io::json to_json(const std::vector<OracleCheck>& checks) {
  io::json arr = io::json::array();
  for (const OracleCheck& c : checks) {
    arr.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  return io::json{{"checks", arr}};
}

std::string to_text(const std::vector<OracleCheck>& checks) {
  std::ostringstream out;
  for (const OracleCheck& c : checks) {
    out << status_name(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace vtemp::report
