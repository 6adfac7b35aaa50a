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

#include "vtemp/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace vtemp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kEmptySystem: return "EmptySystem";
    case Errc::kNegativePopulation: return "NegativePopulation";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kNonFiniteValue: return "NonFiniteValue";
    case Errc::kDegenerateTransition: return "DegenerateTransition";
    case Errc::kUndefinedTemperature: return "UndefinedTemperature";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kDimensionCap: return "DimensionCap";
    case Errc::kDegenerateComposite: return "DegenerateComposite";
    case Errc::kZeroPopulation: return "ZeroPopulation";
    case Errc::kNotActivatable: return "NotActivatable";
    case Errc::kIntervalTooNarrow: return "IntervalTooNarrow";
    case Errc::kDimensionTooLarge: return "DimensionTooLarge";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

DiagonalSystem DiagonalSystem::make(std::vector<double> energies, std::vector<double> populations,
                                    std::optional<std::string> label, const SystemOptions& options) {
  if (energies.empty() || populations.empty()) {
    throw Error(Errc::kEmptySystem, "a system needs at least one level");
  }
  if (energies.size() != populations.size()) {
    std::ostringstream msg;
    msg << energies.size() << " energies but " << populations.size() << " populations";
    throw Error(Errc::kLengthMismatch, msg.str());
  }
  for (std::size_t k = 0; k < energies.size(); ++k) {
    if (!std::isfinite(energies[k]) || !std::isfinite(populations[k])) {
      throw Error(Errc::kNonFiniteValue, "level " + std::to_string(k) + " has a non-finite value");
    }
    if (populations[k] < 0.0) {
      throw Error(Errc::kNegativePopulation, "level " + std::to_string(k) + " has negative population");
    }
  }
  const double total = std::accumulate(populations.begin(), populations.end(), 0.0);
  if (!(std::abs(total - 1.0) <= options.normalization_tolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "populations sum to " << total;
    throw Error(Errc::kNotNormalized, msg.str());
  }
  // Sums that differ from 1 only by summation rounding are left alone so that
  // permuting a valid state's populations reproduces them bit for bit.
  const double rounding = 4.0 * static_cast<double>(populations.size()) * std::numeric_limits<double>::epsilon();
  if (std::abs(total - 1.0) > rounding) {
    for (double& p : populations) p /= total;
  }
  return DiagonalSystem(std::move(energies), std::move(populations), std::move(label));
}

VirtualTemp virtual_temperature_from(double pop_hi, double pop_lo, double gap) {
  if (pop_hi == 0.0 && pop_lo == 0.0) {
    throw Error(Errc::kUndefinedTemperature, "both levels of the transition are empty");
  }
  // log(0) = -inf yields the +/-inf limits directly.
  return VirtualTemp((std::log(pop_lo) - std::log(pop_hi)) / gap);
}

DiagonalSystem gibbs_state(std::span<const double> energies, double beta, std::optional<std::string> label) {
  if (energies.empty()) throw Error(Errc::kEmptySystem, "a system needs at least one level");
  if (!std::isfinite(beta)) throw Error(Errc::kNonFiniteValue, "beta must be finite");
  // Shift by the smallest exponent so the largest weight is exactly 1.
  double min_exponent = std::numeric_limits<double>::infinity();
  for (double e : energies) min_exponent = std::min(min_exponent, beta * e);
  std::vector<double> weights(energies.size());
  double z = 0.0;
  for (std::size_t k = 0; k < energies.size(); ++k) {
    weights[k] = std::exp(-(beta * energies[k] - min_exponent));
    z += weights[k];
  }
  for (double& w : weights) w /= z;
  return DiagonalSystem::make(std::vector<double>(energies.begin(), energies.end()), std::move(weights),
                              std::move(label));
}

Transition make_transition(const DiagonalSystem& sys, std::size_t i, std::size_t j) {
  if (i >= sys.dim() || j >= sys.dim()) {
    throw Error(Errc::kIndexOutOfRange, "level index out of range for d=" + std::to_string(sys.dim()));
  }
  const double ei = sys.energy(i);
  const double ej = sys.energy(j);
  if (ei == ej) {
    throw Error(Errc::kDegenerateTransition,
                "levels " + std::to_string(i) + " and " + std::to_string(j) + " have equal energy");
  }
  Transition t;
  t.hi = ei > ej ? i : j;
  t.lo = ei > ej ? j : i;
  t.gap = sys.energy(t.hi) - sys.energy(t.lo);
  t.pop_hi = sys.population(t.hi);
  t.pop_lo = sys.population(t.lo);
  t.beta = virtual_temperature_from(t.pop_hi, t.pop_lo, t.gap);
  return t;
}

VirtualTemp virtual_temperature(const DiagonalSystem& sys, std::size_t i, std::size_t j) {
  return make_transition(sys, i, j).beta;
}

std::vector<Transition> all_transitions(const DiagonalSystem& sys) {
  std::vector<Transition> out;
  const std::size_t d = sys.dim();
  out.reserve(d * (d - 1) / 2);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      if (sys.energy(a) == sys.energy(b)) continue;
      if (sys.population(a) == 0.0 && sys.population(b) == 0.0) continue;
      out.push_back(make_transition(sys, a, b));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Transition& x, const Transition& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
  });
  return out;
}

DiagonalSystem compose_systems(const DiagonalSystem& a, const DiagonalSystem& b, std::size_t dimension_cap) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da > dimension_cap / db) {
    throw Error(Errc::kDimensionCap, std::to_string(da) + " x " + std::to_string(db) +
                                         " levels exceeds the cap of " + std::to_string(dimension_cap));
  }
  std::vector<double> energies(da * db);
  std::vector<double> populations(da * db);
  for (std::size_t p = 0; p < da; ++p) {
    for (std::size_t q = 0; q < db; ++q) {
      energies[p * db + q] = a.energy(p) + b.energy(q);
      populations[p * db + q] = a.population(p) * b.population(q);
    }
  }
  std::optional<std::string> label;
  if (a.label() && b.label()) label = *a.label() + " x " + *b.label();
  return DiagonalSystem::make(std::move(energies), std::move(populations), std::move(label));
}

double mean_energy(const DiagonalSystem& sys) {
  double total = 0.0;
  for (std::size_t k = 0; k < sys.dim(); ++k) total += sys.population(k) * sys.energy(k);
  return total;
}

std::size_t tensor_index(std::span<const std::size_t> levels, std::size_t dim) {
  std::size_t index = 0;
  for (std::size_t level : levels) {
    if (level >= dim) throw Error(Errc::kIndexOutOfRange, "per-copy level exceeds the dimension");
    index = index * dim + level;
  }
  return index;
}

}  // namespace vtemp
