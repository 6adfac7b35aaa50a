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

// Brute-force validators. Nothing here calls the sorting routine of
// passivity.hpp or any formula of activation.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vtemp/core.hpp"

namespace vtemp::oracle {

inline constexpr std::size_t kMaxBruteForceDim = 8;

/// splitmix64. Seeded, portable, and cheap to split by reseeding from a draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound) by rejection, bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct BruteForceResult {
  double work = 0.0;
  /// perm[k] is the original level whose population ends up at level k.
  std::vector<std::size_t> permutation;
};

/// Maximizes sum_k E_k (p_k - p_perm[k]) over all d! permutations;
/// lexicographically smallest maximizer. Throws kDimensionTooLarge for d > 8.
BruteForceResult brute_force_ergotropy(const DiagonalSystem& sys);

/// sys^(x copies), built by repeated compose_systems.
DiagonalSystem tensor_power(const DiagonalSystem& sys, std::size_t copies,
                            std::size_t dimension_cap = kDefaultDimensionCap);

struct InversionTolerance {
  /// Energies closer than energy * scale are treated as degenerate, where
  /// scale = max(1, max |E|).
  double energy = 1e-12;
  /// Populations must differ by more than this relative amount.
  double population = 1e-12;
};

struct LevelPair {
  std::size_t hi = 0;
  std::size_t lo = 0;
  bool operator==(const LevelPair&) const = default;
};

/// True iff E_hi > E_lo and p_hi > p_lo beyond the tolerances.
bool is_inverted(const DiagonalSystem& sys, std::size_t hi, std::size_t lo, const InversionTolerance& tol = {});

/// First population inversion in sys, smallest `hi` first, then smallest `lo`.
std::optional<LevelPair> find_inversion(const DiagonalSystem& sys, const InversionTolerance& tol = {});

/// Builds the full tensor power and scans it for a population inversion.
/// Throws kDimensionCap when d^copies exceeds the cap.
std::optional<LevelPair> tensor_power_nonpassivity(const DiagonalSystem& sys, std::size_t copies,
                                                   std::size_t dimension_cap = kDefaultDimensionCap,
                                                   const InversionTolerance& tol = {});

struct ExhaustiveSearch {
  /// Smallest copy count whose tensor power has an inversion, if found.
  std::optional<std::size_t> minimal_copies;
  /// Largest copy count actually scanned.
  std::size_t scanned_up_to = 0;
};

/// Scans copies = 1, 2, ... up to max_copies, stopping early at the first
/// inversion or when d^copies would exceed the cap.
ExhaustiveSearch minimal_activating_copies(const DiagonalSystem& sys, std::size_t max_copies,
                                           std::size_t dimension_cap = kDefaultDimensionCap,
                                           const InversionTolerance& tol = {});

/// Convex mixture of permutation matrices. Each permutation is in image form:
/// term.second[j] = i places a 1 at S(i, j).
class StochasticMatrix {
 public:
  using Term = std::pair<double, std::vector<std::size_t>>;

  /// Throws kInvalidArgument for invalid permutations or weights that are
  /// negative or do not sum to 1 within 1e-12.
  StochasticMatrix(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Dense row-major S.
  std::vector<double> dense() const;

 private:
  std::size_t dim_;
  std::vector<Term> terms_;
};

/// sum_ij S_ij p_j E_i evaluated term by term. Throws kDimensionMismatch.
double energy_under_stochastic(const DiagonalSystem& sys, const StochasticMatrix& s);

/// `terms` uniformly drawn permutations of `dim` levels with flat-Dirichlet
/// weights. Deterministic in `seed`. Throws kDimensionTooLarge for dim > 8 and
/// kInvalidArgument for dim or terms of zero.
StochasticMatrix sample_doubly_stochastic(std::size_t dim, std::size_t terms, std::uint64_t seed);

}  // namespace vtemp::oracle
