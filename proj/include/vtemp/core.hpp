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

// Diagonal quantum states, transitions between their energy levels and the
// virtual inverse temperatures attached to those transitions.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtemp/error.hpp"

namespace vtemp {

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr std::size_t kDefaultDimensionCap = 1'000'000;

struct SystemOptions {
  /// Absolute tolerance on |sum(populations) - 1|.
  double normalization_tolerance = kNormalizationTolerance;
};

/// A state diagonal in the energy eigenbasis: H = sum E_k |k><k|,
/// rho = sum p_k |k><k|. Levels keep the indices they were given; no ordering
/// of the energies is assumed.
class DiagonalSystem {
 public:
  /// Validates and (if within tolerance of 1) renormalizes the populations.
  /// Throws Error with kEmptySystem, kLengthMismatch, kNonFiniteValue,
  /// kNegativePopulation or kNotNormalized.
  static DiagonalSystem make(std::vector<double> energies, std::vector<double> populations,
                             std::optional<std::string> label = std::nullopt,
                             const SystemOptions& options = {});

  std::size_t dim() const noexcept { return energies_.size(); }
  std::span<const double> energies() const noexcept { return energies_; }
  std::span<const double> populations() const noexcept { return populations_; }
  double energy(std::size_t level) const { return energies_.at(level); }
  double population(std::size_t level) const { return populations_.at(level); }
  const std::optional<std::string>& label() const noexcept { return label_; }

  bool operator==(const DiagonalSystem&) const = default;

 private:
  DiagonalSystem(std::vector<double> energies, std::vector<double> populations,
                 std::optional<std::string> label)
      : energies_(std::move(energies)), populations_(std::move(populations)), label_(std::move(label)) {}

  std::vector<double> energies_;
  std::vector<double> populations_;
  std::optional<std::string> label_;
};

/// Virtual inverse temperature of a transition. May be +inf (empty upper
/// level) or -inf (empty lower level); never NaN.
class VirtualTemp {
 public:
  constexpr VirtualTemp() = default;
  constexpr explicit VirtualTemp(double value) : value_(value) {}

  static constexpr VirtualTemp plus_infinity() { return VirtualTemp(std::numeric_limits<double>::infinity()); }
  static constexpr VirtualTemp minus_infinity() { return VirtualTemp(-std::numeric_limits<double>::infinity()); }

  constexpr double value() const noexcept { return value_; }
  bool is_finite() const noexcept { return std::isfinite(value_); }

  constexpr auto operator<=>(const VirtualTemp&) const = default;

 private:
  double value_ = 0.0;
};

/// A pair of levels with strictly positive gap, oriented so that `hi` is the
/// upper level.
struct Transition {
  std::size_t hi = 0;
  std::size_t lo = 0;
  double gap = 0.0;
  double pop_hi = 0.0;
  double pop_lo = 0.0;
  VirtualTemp beta;

  /// (E_hi - E_lo)(p_hi - p_lo): energy released by exchanging the two populations.
  double swap_work() const noexcept { return gap * (pop_hi - pop_lo); }

  bool operator==(const Transition&) const = default;
};

/// beta_v = (log p_lo - log p_hi) / gap, evaluated in log domain.
/// Throws kUndefinedTemperature when both populations vanish.
VirtualTemp virtual_temperature_from(double pop_hi, double pop_lo, double gap);

/// Populations proportional to exp(-beta E_k). Any finite beta is accepted;
/// negative beta gives a population-inverted state.
DiagonalSystem gibbs_state(std::span<const double> energies, double beta,
                           std::optional<std::string> label = std::nullopt);

/// Virtual temperature of the transition between levels i and j, in either
/// order. Throws kIndexOutOfRange, kDegenerateTransition (E_i == E_j) or
/// kUndefinedTemperature.
VirtualTemp virtual_temperature(const DiagonalSystem& sys, std::size_t i, std::size_t j);

/// Transition between levels i and j oriented to a positive gap. Same errors
/// as virtual_temperature.
Transition make_transition(const DiagonalSystem& sys, std::size_t i, std::size_t j);

/// Every nondegenerate transition, ordered by (lo, hi). Degenerate pairs are
/// skipped, as are pairs with both populations zero.
std::vector<Transition> all_transitions(const DiagonalSystem& sys);

/// Tensor product a (x) b. Composite level (p, q) has index p * b.dim() + q.
/// Throws kDimensionCap when a.dim() * b.dim() exceeds `dimension_cap`.
DiagonalSystem compose_systems(const DiagonalSystem& a, const DiagonalSystem& b,
                               std::size_t dimension_cap = kDefaultDimensionCap);

/// <H> = sum p_k E_k.
double mean_energy(const DiagonalSystem& sys);

/// Index of a tensor-power level from its per-copy levels, first copy most
/// significant (matches repeated compose_systems).
std::size_t tensor_index(std::span<const std::size_t> levels, std::size_t dim);

}  // namespace vtemp
