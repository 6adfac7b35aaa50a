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

#include <doctest.h>

#include <cmath>

#include "vtemp/activation.hpp"
#include "vtemp/oracle.hpp"

using namespace vtemp;

namespace {

// Qubit with the given gap and virtual temperature.
DiagonalSystem thermal_qubit(double gap, double beta) { return gibbs_state(std::vector<double>{0, gap}, beta); }

Transition only_transition(const DiagonalSystem& qubit) { return make_transition(qubit, 1, 0); }

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kInvalidArgument;
}

// Sign of the composite virtual temperature computed straight from the
// populations of the four base levels, independent of the library formulas.
bool direct_inversion(const Transition& cold, const Transition& hot, int n, int k) {
  const double gap = n * cold.gap - k * hot.gap;
  const double log_hi = n * std::log(cold.pop_hi) + k * std::log(hot.pop_lo);
  const double log_lo = n * std::log(cold.pop_lo) + k * std::log(hot.pop_hi);
  return gap > 0 && log_hi > log_lo;
}

}  // namespace

TEST_CASE("compose rules against an explicit product state") {
  const auto a = thermal_qubit(1.0, 1.0);
  const auto b = thermal_qubit(2.0, 2.0);
  const auto t1 = only_transition(a);
  const auto t2 = only_transition(b);
  const auto product = compose_systems(a, b);
  // Level (p, q) -> 2p + q: anti-parallel pair |1>|0> vs |0>|1>, parallel pair |1>|1> vs |0>|0>.
  const double direct_anti = virtual_temperature(product, 2, 1).value();
  const double direct_par = virtual_temperature(product, 3, 0).value();

  CHECK(compose_antiparallel(t1, t2).value() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(compose_antiparallel(t1, t2).value() == doctest::Approx(direct_anti).epsilon(1e-12));
  CHECK(compose_antiparallel(t2, t1).value() == doctest::Approx(3.0).epsilon(1e-12));

  CHECK(compose_parallel(t1, t2).value() == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(compose_parallel(t1, t2).value() == doctest::Approx(direct_par).epsilon(1e-12));
}

TEST_CASE("compose rules at a single temperature") {
  const auto t1 = only_transition(thermal_qubit(1.0, 0.8));
  const auto t2 = only_transition(thermal_qubit(2.5, 0.8));
  CHECK(compose_antiparallel(t1, t2).value() == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(compose_parallel(t1, t2).value() == doctest::Approx(0.8).epsilon(1e-12));

  const auto zero = only_transition(thermal_qubit(1.0, 0.0));
  const auto four = only_transition(thermal_qubit(1.0, 4.0));
  CHECK(compose_parallel(zero, four).value() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(error_of([&] { compose_antiparallel(zero, four); }) == Errc::kDegenerateComposite);

  const auto infinite = only_transition(DiagonalSystem::make({0, 1}, {1.0, 0.0}));
  CHECK(error_of([&] { compose_parallel(zero, infinite); }) == Errc::kInvalidArgument);
}

TEST_CASE("copy counts for the two-qubit example") {
  const auto cold = only_transition(thermal_qubit(1.0, 1.0));
  const auto hot = only_transition(thermal_qubit(2.0, 2.0));
  const auto counts = copy_counts_for_inversion(cold, hot);
  CHECK(counts == CopyCounts{3, 1});
  // Interval (2, 4): nothing with n + k <= 3 fits, (3, 1) does.
  for (int total = 2; total <= 4; ++total) {
    for (int k = 1; k < total; ++k) {
      const int n = total - k;
      const bool inside = 2 * k < n && n < 4 * k;
      CHECK(direct_inversion(cold, hot, n, k) == inside);
      if (total < 4) CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("copy counts for the qutrit pair") {
  const auto sys = DiagonalSystem::make({0, 1, 3}, {0.6, 0.3, 0.1});
  const auto cold = make_transition(sys, 2, 1);  // gap 2, beta ln3/2
  const auto hot = make_transition(sys, 1, 0);   // gap 1, beta ln2
  CHECK(cold.beta.value() == doctest::Approx(std::log(3.0) / 2).epsilon(1e-14));
  CHECK(hot.beta.value() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  const auto counts = copy_counts_for_inversion(cold, hot);
  CHECK(counts == CopyCounts{3, 5});
  int smallest = 0;
  for (int total = 2; total <= 40 && smallest == 0; ++total) {
    for (int k = 1; k < total; ++k) {
      if (direct_inversion(cold, hot, total - k, k)) {
        smallest = total;
        CHECK(k == 5);
        break;
      }
    }
  }
  CHECK(smallest == 8);
}

TEST_CASE("copy counts reject equal or misordered temperatures") {
  const auto t = only_transition(thermal_qubit(1.0, 1.0));
  const auto u = only_transition(thermal_qubit(2.0, 1.0));
  CHECK(error_of([&] { copy_counts_for_inversion(t, u); }) == Errc::kNotActivatable);
  const auto hotter = only_transition(thermal_qubit(2.0, 3.0));
  CHECK(error_of([&] { copy_counts_for_inversion(hotter, t); }) == Errc::kNotActivatable);
  const auto negative = only_transition(thermal_qubit(1.0, -1.0));
  CHECK(error_of([&] { copy_counts_for_inversion(negative, t); }) == Errc::kNotActivatable);
}

TEST_CASE("copy counts hit the denominator cap for nearly equal temperatures") {
  const auto cold = only_transition(thermal_qubit(1.0, 1.0));
  const auto hot = only_transition(thermal_qubit(std::sqrt(2.0), 1.0 + 1e-7));
  ActivationOptions options;
  options.max_denominator = 1000;
  options.beta_tolerance = 1e-12;
  CHECK(error_of([&] { copy_counts_for_inversion(cold, hot, options); }) == Errc::kIntervalTooNarrow);
  options.max_denominator = 100'000'000;
  const auto counts = copy_counts_for_inversion(cold, hot, options);
  CHECK(inside_criterion(cold, hot, counts.n, counts.k));
  CHECK(composite_transition(cold, hot, counts.n, counts.k).beta.value() < 0.0);
}

TEST_CASE("copy counts with an unbounded interval") {
  // beta1 = 0: any n/k above D2/D1 inverts.
  const auto cold = only_transition(thermal_qubit(1.0, 0.0));
  const auto hot = only_transition(thermal_qubit(2.5, 1.0));
  CHECK(copy_counts_for_inversion(cold, hot) == CopyCounts{3, 1});
  // Empty upper level on the hot transition.
  const auto empty = only_transition(DiagonalSystem::make({0, 1}, {1.0, 0.0}));
  const auto warm = only_transition(thermal_qubit(1.0, 0.5));
  CHECK(copy_counts_for_inversion(warm, empty) == CopyCounts{2, 1});
}

TEST_CASE("composite_transition") {
  const auto a = thermal_qubit(1.0, 1.0);
  const auto b = thermal_qubit(2.0, 2.0);
  const auto cold = only_transition(a);
  const auto hot = only_transition(b);
  const auto c = composite_transition(cold, hot, 3, 1);
  CHECK(c.gap == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.beta.value() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(composite_beta_closed_form(cold, hot, 3, 1).value() == doctest::Approx(-1.0).epsilon(1e-12));

  // Full tensor product a^3 (x) b: |1 1 1 0> (energy 3) vs |0 0 0 1> (energy 2).
  const auto power = compose_systems(oracle::tensor_power(a, 3), b);
  const std::size_t hi = 1 * 8 + 1 * 4 + 1 * 2 + 0;
  const std::size_t lo = 0 * 8 + 0 * 4 + 0 * 2 + 1;
  CHECK(power.energy(hi) - power.energy(lo) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(virtual_temperature(power, hi, lo).value() == doctest::Approx(-1.0).epsilon(1e-12));

  const auto same = composite_transition(only_transition(thermal_qubit(1.0, 1.0)),
                                         only_transition(thermal_qubit(2.0, 1.0)), 1, 1);
  CHECK(same.beta.value() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(error_of([&] { composite_transition(cold, cold, 1, 1); }) == Errc::kDegenerateComposite);
  CHECK(error_of([&] { composite_transition(cold, hot, 0, 1); }) == Errc::kInvalidArgument);
}

TEST_CASE("composite_transition with empty levels") {
  const auto sys = DiagonalSystem::make({0, 1, 2}, {0.5, 0.5, 0.0});
  const auto cold = make_transition(sys, 1, 0);  // beta 0
  const auto hot = make_transition(sys, 2, 1);   // beta +inf
  const auto c = composite_transition(cold, hot, 2, 1);
  CHECK(c.gap == 1.0);
  CHECK(c.beta == VirtualTemp::minus_infinity());
  const auto both_empty = make_transition(DiagonalSystem::make({0, 1, 2, 3}, {1.0, 0.0, 0.0, 0.0}), 3, 0);
  const auto other = make_transition(DiagonalSystem::make({0, 1, 2, 3}, {1.0, 0.0, 0.0, 0.0}), 1, 0);
  CHECK(error_of([&] { composite_transition(both_empty, other, 1, 1); }) == Errc::kZeroPopulation);
}

TEST_CASE("activation_certificate for the worked qutrit") {
  const auto sys = DiagonalSystem::make({0, 1, 3}, {0.6, 0.3, 0.1});
  const auto cert = activation_certificate(sys);
  REQUIRE(cert);
  CHECK(cert->total_copies == 8);
  CHECK(cert->composite.n == 3);
  CHECK(cert->composite.k == 5);
  CHECK((cert->composite.base_cold.hi == 2 && cert->composite.base_cold.lo == 1));
  CHECK((cert->composite.base_hot.hi == 1 && cert->composite.base_hot.lo == 0));
  CHECK(cert->composite.beta.value() == doctest::Approx(3 * std::log(3.0) - 5 * std::log(2.0)).epsilon(1e-12));
  CHECK(cert->composite.beta.value() == doctest::Approx(-0.16989).epsilon(1e-4));
  // gap 1 * (0.1^3 0.6^5 - 0.3^8)
  CHECK(cert->work == doctest::Approx(std::pow(0.1, 3) * std::pow(0.6, 5) - std::pow(0.3, 8)).epsilon(1e-10));
  CHECK(cert->swap_level_hi == std::vector<std::size_t>{2, 2, 2, 0, 0, 0, 0, 0});
  CHECK(cert->swap_level_lo == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("activation_certificate edge cases") {
  CHECK_FALSE(activation_certificate(gibbs_state(std::vector<double>{0, 1, 3}, 1.0)));
  CHECK_FALSE(activation_certificate(DiagonalSystem::make({0, 0, 1}, {0.5, 0.5, 0.0})));

  const auto single = activation_certificate(DiagonalSystem::make({0, 1}, {0.3, 0.7}));
  REQUIRE(single);
  CHECK(single->total_copies == 1);
  CHECK(single->composite.n == 1);
  CHECK(single->composite.k == 0);
  CHECK(single->work == doctest::Approx(0.4).epsilon(1e-12));

  // Not completely passive only because of the empty top level.
  const auto sparse = DiagonalSystem::make({0, 1, 2}, {0.5, 0.5, 0.0});
  const auto cert = activation_certificate(sparse);
  REQUIRE(cert);
  CHECK(cert->total_copies == 3);
  const auto power = oracle::tensor_power(sparse, 3);
  CHECK(oracle::is_inverted(power, tensor_index(cert->swap_level_hi, 3), tensor_index(cert->swap_level_lo, 3)));
}

TEST_CASE("make_certificate rejects non-inverted composites") {
  const auto cold = only_transition(thermal_qubit(1.0, 1.0));
  const auto hot = only_transition(thermal_qubit(2.0, 2.0));
  CHECK(error_of([&] { make_certificate(composite_transition(cold, hot, 5, 1)); }) == Errc::kInvalidArgument);
  CHECK(error_of([&] { make_certificate(composite_transition(cold, hot, 1, 1)); }) == Errc::kInvalidArgument);
}
