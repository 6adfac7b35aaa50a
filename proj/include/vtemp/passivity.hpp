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

#include <cstddef>
#include <utility>
#include <vector>

#include "vtemp/core.hpp"

namespace vtemp {

inline constexpr double kBetaEqualityTolerance = 1e-9;

/// Optimal reordering of a diagonal state: populations sorted non-increasing
/// against energies sorted non-decreasing.
struct PassiveRearrangement {
  /// permutation[k] is the level that receives the population of level k.
  std::vector<std::size_t> permutation;
  DiagonalSystem passive_system;
  /// <H>(input) - <H>(passive_system); the ergotropy.
  double work = 0.0;
};

/// True iff E_i > E_j implies p_i <= p_j for every pair of levels. Equal
/// populations across a gap count as passive since no work is extractable.
bool is_passive(const DiagonalSystem& sys);

/// True iff every transition between populated levels carries the same
/// non-negative virtual temperature (relative tolerance `tol`) and no level is
/// empty, or all populated levels share the ground energy.
bool is_completely_passive(const DiagonalSystem& sys, double tol = kBetaEqualityTolerance);

/// |a - b| <= tol * max(1, |a|, |b|) for finite values; infinities compare equal
/// only to themselves.
bool betas_equal(VirtualTemp a, VirtualTemp b, double tol = kBetaEqualityTolerance);

/// Ties in energy and in population are broken by original index.
PassiveRearrangement passive_rearrangement(const DiagonalSystem& sys);

double ergotropy(const DiagonalSystem& sys);

/// Exchanges the populations of levels i and j. Returns the new state and the
/// work released, W = (E_i - E_j)(p_i - p_j).
std::pair<DiagonalSystem, double> apply_swap(const DiagonalSystem& sys, std::size_t i, std::size_t j);

}  // namespace vtemp
