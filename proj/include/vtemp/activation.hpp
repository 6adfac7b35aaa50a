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

// Multi-copy activation of passive states: composition of virtual
// temperatures, the copy-count criterion and explicit work-extraction
// certificates built from two transitions at different temperatures.

#include <cstddef>
#include <optional>
#include <vector>

#include "vtemp/core.hpp"
#include "vtemp/passivity.hpp"

namespace vtemp {

inline constexpr std::size_t kDefaultMaxDenominator = 1'000'000;
/// Relative guard band used where a comparison has to be strict.
inline constexpr double kStrictGuard = 1e-12;

struct ActivationOptions {
  /// Largest copy count (n or k) the Stern-Brocot descent may reach.
  std::size_t max_denominator = kDefaultMaxDenominator;
  /// Relative tolerance under which two virtual temperatures are "equal".
  double beta_tolerance = kBetaEqualityTolerance;
};

/// Transition between |i>^n |j'>^k (upper) and |j>^n |i'>^k (lower) of an
/// (n+k)-copy tensor power, where (i, j) is `base_cold` and (i', j') is
/// `base_hot`. `gap` may be negative when n/k is below the criterion interval.
struct CompositeTransition {
  Transition base_hot;
  Transition base_cold;
  std::size_t n = 0;
  std::size_t k = 0;
  double gap = 0.0;
  double log_pop_hi = 0.0;
  double log_pop_lo = 0.0;
  VirtualTemp beta;
};

struct ActivationCertificate {
  CompositeTransition composite;
  std::size_t total_copies = 0;
  /// gap * (pop_hi - pop_lo); log_work is its natural log, kept for large
  /// copy counts where `work` underflows.
  double work = 0.0;
  double log_work = 0.0;
  /// Per-copy levels of the two swapped composite levels.
  std::vector<std::size_t> swap_level_hi;
  std::vector<std::size_t> swap_level_lo;
};

struct CopyCounts {
  std::size_t n = 0;
  std::size_t k = 0;
  bool operator==(const CopyCounts&) const = default;
};

/// (b2 D2 - b1 D1) / (D2 - D1) for a pair of transitions composed against
/// each other. Symmetric in its arguments. Throws kDegenerateComposite when the
/// gaps coincide and kInvalidArgument on an infinite temperature.
VirtualTemp compose_antiparallel(const Transition& t1, const Transition& t2);

/// (b2 D2 + b1 D1) / (D2 + D1). Always between the two inputs. Throws
/// kInvalidArgument on an infinite temperature.
VirtualTemp compose_parallel(const Transition& t1, const Transition& t2);

/// (b1 n D1 - b2 k D2) / (n D1 - k D2) evaluated from the base temperatures.
VirtualTemp composite_beta_closed_form(const Transition& t_cold, const Transition& t_hot, std::size_t n,
                                       std::size_t k);

/// Smallest n + k with D2/D1 < n/k < (D2/D1)(b2/b1), found as the simplest
/// fraction of the open interval by Stern-Brocot descent.
///
/// Requires 0 <= b1 < b2 with b1 finite; b1 = 0 or b2 = +inf make the
/// interval unbounded above. Throws kNotActivatable when the temperatures are
/// equal within tolerance, b1 < 0 or b1 is infinite, and kIntervalTooNarrow
/// when n or k would exceed options.max_denominator.
CopyCounts copy_counts_for_inversion(const Transition& t_cold, const Transition& t_hot,
                                     const ActivationOptions& options = {});

/// True iff n/k lies strictly inside the criterion interval, decided from the
/// sign of n D1 - k D2 and of b1 n D1 - b2 k D2 with a relative guard band.
bool inside_criterion(const Transition& t_cold, const Transition& t_hot, std::size_t n, std::size_t k);

/// True iff n/k lies outside the closed criterion interval.
bool outside_closed_criterion(const Transition& t_cold, const Transition& t_hot, std::size_t n, std::size_t k);

/// Builds the composite transition in log-population domain. Throws
/// kInvalidArgument for n or k of zero, kDegenerateComposite when n D1 == k D2
/// and kZeroPopulation when both composite levels are empty.
CompositeTransition composite_transition(const Transition& t_cold, const Transition& t_hot, std::size_t n,
                                         std::size_t k);

/// Certificate for the composite transition (must have negative beta and
/// positive gap, else kInvalidArgument).
ActivationCertificate make_certificate(const CompositeTransition& composite);

/// None for completely passive states. A non-passive state yields a
/// single-copy certificate (n = 1, k = 0) on its best inverted transition.
/// Otherwise every pair of transitions with distinct temperatures is tried
/// and the certificate with fewest copies wins (then larger work, then
/// smaller level indices).
std::optional<ActivationCertificate> activation_certificate(const DiagonalSystem& sys,
                                                            const ActivationOptions& options = {});

}  // namespace vtemp
