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

#include "vtemp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vtemp::oracle {

BruteForceResult brute_force_ergotropy(const DiagonalSystem& sys) {
  const std::size_t d = sys.dim();
  if (d > kMaxBruteForceDim) {
    throw Error(Errc::kDimensionTooLarge, "brute force is limited to d <= 8, got d=" + std::to_string(d));
  }
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  BruteForceResult best{0.0, perm};
  bool first = true;
  do {
    double work = 0.0;
    for (std::size_t k = 0; k < d; ++k) work += sys.energy(k) * (sys.population(k) - sys.population(perm[k]));
    if (first || work > best.work) {
      best = {work, perm};
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DiagonalSystem tensor_power(const DiagonalSystem& sys, std::size_t copies, std::size_t dimension_cap) {
  if (copies == 0) throw Error(Errc::kInvalidArgument, "tensor power needs at least one copy");
  std::size_t dim = 1;
  for (std::size_t c = 0; c < copies; ++c) {
    if (dim > dimension_cap / sys.dim()) {
      throw Error(Errc::kDimensionCap, "d^copies exceeds the cap of " + std::to_string(dimension_cap));
    }
    dim *= sys.dim();
  }
  DiagonalSystem power = sys;
  for (std::size_t c = 1; c < copies; ++c) power = compose_systems(power, sys, dimension_cap);
  return power;
}

namespace {

double energy_scale(const DiagonalSystem& sys) {
  double scale = 1.0;
  for (double e : sys.energies()) scale = std::max(scale, std::abs(e));
  return scale;
}

}  // namespace

bool is_inverted(const DiagonalSystem& sys, std::size_t hi, std::size_t lo, const InversionTolerance& tol) {
  if (hi >= sys.dim() || lo >= sys.dim()) throw Error(Errc::kIndexOutOfRange, "level pair out of range");
  const double etol = tol.energy * energy_scale(sys);
  return sys.energy(hi) - sys.energy(lo) > etol &&
         sys.population(lo) < sys.population(hi) * (1.0 - tol.population);
}

std::optional<LevelPair> find_inversion(const DiagonalSystem& sys, const InversionTolerance& tol) {
  const std::size_t d = sys.dim();
  const double etol = tol.energy * energy_scale(sys);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sys.energy(a) < sys.energy(b); });
  std::vector<double> sorted_energy(d);
  std::vector<double> prefix_min(d);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < d; ++r) {
    sorted_energy[r] = sys.energy(order[r]);
    running = std::min(running, sys.population(order[r]));
    prefix_min[r] = running;
  }
  for (std::size_t a = 0; a < d; ++a) {
    const double threshold = sys.energy(a) - etol;
    const auto below = static_cast<std::size_t>(
        std::lower_bound(sorted_energy.begin(), sorted_energy.end(), threshold) - sorted_energy.begin());
    if (below == 0) continue;
    const double limit = sys.population(a) * (1.0 - tol.population);
    if (!(prefix_min[below - 1] < limit)) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (sys.energy(b) < threshold && sys.population(b) < limit) return LevelPair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<LevelPair> tensor_power_nonpassivity(const DiagonalSystem& sys, std::size_t copies,
                                                   std::size_t dimension_cap, const InversionTolerance& tol) {
  return find_inversion(tensor_power(sys, copies, dimension_cap), tol);
}

ExhaustiveSearch minimal_activating_copies(const DiagonalSystem& sys, std::size_t max_copies,
                                           std::size_t dimension_cap, const InversionTolerance& tol) {
  ExhaustiveSearch result;
  std::size_t dim = 1;
  for (std::size_t copies = 1; copies <= max_copies; ++copies) {
    if (dim > dimension_cap / sys.dim()) break;
    dim *= sys.dim();
    result.scanned_up_to = copies;
    if (tensor_power_nonpassivity(sys, copies, dimension_cap, tol)) {
      result.minimal_copies = copies;
      break;
    }
  }
  return result;
}

StochasticMatrix::StochasticMatrix(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
  if (dim_ == 0 || terms_.empty()) throw Error(Errc::kInvalidArgument, "empty stochastic matrix");
  double total = 0.0;
  for (const auto& [weight, perm] : terms_) {
    if (!(weight >= 0.0)) throw Error(Errc::kInvalidArgument, "mixture weights must be non-negative");
    total += weight;
    if (perm.size() != dim_) throw Error(Errc::kInvalidArgument, "permutation has the wrong length");
    std::vector<bool> seen(dim_, false);
    for (std::size_t image : perm) {
      if (image >= dim_ || seen[image]) throw Error(Errc::kInvalidArgument, "not a permutation");
      seen[image] = true;
    }
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(Errc::kInvalidArgument, "mixture weights must sum to 1");
}

std::vector<double> StochasticMatrix::dense() const {
  std::vector<double> s(dim_ * dim_, 0.0);
  for (const auto& [weight, perm] : terms_) {
    for (std::size_t j = 0; j < dim_; ++j) s[perm[j] * dim_ + j] += weight;
  }
  return s;
}

double energy_under_stochastic(const DiagonalSystem& sys, const StochasticMatrix& s) {
  if (s.dim() != sys.dim()) {
    throw Error(Errc::kDimensionMismatch, "matrix dimension " + std::to_string(s.dim()) + " vs system dimension " +
                                              std::to_string(sys.dim()));
  }
  double energy = 0.0;
  for (const auto& [weight, perm] : s.terms()) {
    double term = 0.0;
    for (std::size_t j = 0; j < s.dim(); ++j) term += sys.population(j) * sys.energy(perm[j]);
    energy += weight * term;
  }
  return energy;
}

StochasticMatrix sample_doubly_stochastic(std::size_t dim, std::size_t terms, std::uint64_t seed) {
  if (dim == 0 || terms == 0) throw Error(Errc::kInvalidArgument, "dim and terms must be positive");
  if (dim > kMaxBruteForceDim) throw Error(Errc::kDimensionTooLarge, "sampling is limited to dim <= 8");
  SplitMix64 rng(seed);
  std::vector<StochasticMatrix::Term> mixture;
  mixture.reserve(terms);
  double total = 0.0;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = dim - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    const double weight = -std::log1p(-rng.uniform());
    total += weight;
    mixture.emplace_back(weight, std::move(perm));
  }
  if (total == 0.0) {
    for (auto& term : mixture) term.first = 1.0;
    total = static_cast<double>(terms);
  }
  for (auto& term : mixture) term.first /= total;
  return StochasticMatrix(dim, std::move(mixture));
}

}  // namespace vtemp::oracle
