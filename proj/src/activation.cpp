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

#include "vtemp/activation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace vtemp {

namespace {

void require_finite(const Transition& t, const char* what) {
  if (!t.beta.is_finite()) {
    throw Error(Errc::kInvalidArgument, std::string(what) + " needs finite virtual temperatures");
  }
}

std::string describe(const Transition& t) {
  std::ostringstream out;
  out << "(" << t.hi << "," << t.lo << ")";
  return out.str();
}

std::string describe_pair(const Transition& cold, const Transition& hot) {
  return "cold " + describe(cold) + " / hot " + describe(hot);
}

struct Fraction {
  std::size_t p = 0;
  std::size_t q = 0;
};

// p/q <= D2/D1, inflated by the guard band.
bool at_or_below_lower(const Transition& cold, const Transition& hot, double p, double q) {
  const double a = p * cold.gap;
  const double b = q * hot.gap;
  return !(a - b > kStrictGuard * (a + b));
}

// p/q >= (D2/D1)(b2/b1), deflated by the guard band. Never true for an
// unbounded interval.
bool at_or_above_upper(const Transition& cold, const Transition& hot, double p, double q) {
  if (!hot.beta.is_finite()) return false;
  const double a = cold.beta.value() * p * cold.gap;
  const double b = hot.beta.value() * q * hot.gap;
  return !(a - b < -kStrictGuard * (std::abs(a) + std::abs(b)));
}

// Largest t >= 1 such that pred(base + t * step) holds, given that it holds at
// t = 1, with both components of base + t * step kept within `cap`.
template <typename Pred>
std::size_t gallop(Fraction base, Fraction step, std::size_t cap, Pred pred) {
  auto limit = [&](std::size_t from, std::size_t by) {
    return by == 0 ? cap : (from >= cap ? 0 : (cap - from) / by);
  };
  const std::size_t t_max = std::max<std::size_t>(1, std::min(limit(base.p, step.p), limit(base.q, step.q)));
  auto holds = [&](std::size_t t) {
    return pred(static_cast<double>(base.p + t * step.p), static_cast<double>(base.q + t * step.q));
  };
  std::size_t good = 1;
  std::size_t bad = t_max + 1;
  for (std::size_t t = 2; t <= t_max; t = (t > t_max / 2) ? t_max + 1 : t * 2) {
    if (!holds(t)) {
      bad = t;
      break;
    }
    good = t;
  }
  while (bad - good > 1) {
    const std::size_t mid = good + (bad - good) / 2;
    if (holds(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

using Rank = std::tuple<std::size_t, double, std::size_t, std::size_t, std::size_t, std::size_t>;

Rank rank_of(const ActivationCertificate& c) {
  const auto& m = c.composite;
  return {c.total_copies, -c.log_work, m.base_cold.hi, m.base_cold.lo, m.base_hot.hi, m.base_hot.lo};
}

CompositeTransition single_copy_composite(const Transition& t) {
  CompositeTransition c;
  c.base_cold = t;
  c.base_hot = t;
  c.n = 1;
  c.k = 0;
  c.gap = t.gap;
  c.log_pop_hi = std::log(t.pop_hi);
  c.log_pop_lo = std::log(t.pop_lo);
  c.beta = t.beta;
  return c;
}

}  // namespace

VirtualTemp compose_antiparallel(const Transition& t1, const Transition& t2) {
  require_finite(t1, "compose_antiparallel");
  require_finite(t2, "compose_antiparallel");
  const double d1 = t1.gap;
  const double d2 = t2.gap;
  if (std::abs(d2 - d1) <= kStrictGuard * std::max(d1, d2)) {
    throw Error(Errc::kDegenerateComposite, "equal gaps cancel in the anti-parallel composition");
  }
  return VirtualTemp((t2.beta.value() * d2 - t1.beta.value() * d1) / (d2 - d1));
}

VirtualTemp compose_parallel(const Transition& t1, const Transition& t2) {
  require_finite(t1, "compose_parallel");
  require_finite(t2, "compose_parallel");
  const double d1 = t1.gap;
  const double d2 = t2.gap;
  const double mixed = (t2.beta.value() * d2 + t1.beta.value() * d1) / (d2 + d1);
  // Clamp rounding so the result never leaves the closed interval.
  const double lo = std::min(t1.beta.value(), t2.beta.value());
  const double hi = std::max(t1.beta.value(), t2.beta.value());
  return VirtualTemp(std::clamp(mixed, lo, hi));
}

VirtualTemp composite_beta_closed_form(const Transition& t_cold, const Transition& t_hot, std::size_t n,
                                       std::size_t k) {
  const double nd1 = static_cast<double>(n) * t_cold.gap;
  const double kd2 = static_cast<double>(k) * t_hot.gap;
  const double numerator = t_cold.beta.value() * nd1 - t_hot.beta.value() * kd2;
  return VirtualTemp(numerator / (nd1 - kd2));
}

bool inside_criterion(const Transition& t_cold, const Transition& t_hot, std::size_t n, std::size_t k) {
  const double p = static_cast<double>(n);
  const double q = static_cast<double>(k);
  return !at_or_below_lower(t_cold, t_hot, p, q) && !at_or_above_upper(t_cold, t_hot, p, q);
}

bool outside_closed_criterion(const Transition& t_cold, const Transition& t_hot, std::size_t n, std::size_t k) {
  const double nd1 = static_cast<double>(n) * t_cold.gap;
  const double kd2 = static_cast<double>(k) * t_hot.gap;
  if (nd1 - kd2 < -kStrictGuard * (nd1 + kd2)) return true;
  if (!t_hot.beta.is_finite()) return false;
  const double a = t_cold.beta.value() * nd1;
  const double b = t_hot.beta.value() * kd2;
  return a - b > kStrictGuard * (std::abs(a) + std::abs(b));
}

CopyCounts copy_counts_for_inversion(const Transition& t_cold, const Transition& t_hot,
                                     const ActivationOptions& options) {
  const VirtualTemp b1 = t_cold.beta;
  const VirtualTemp b2 = t_hot.beta;
  if (!b1.is_finite() || b1.value() < 0.0) {
    throw Error(Errc::kNotActivatable, "cold transition needs a finite non-negative temperature, " +
                                           describe_pair(t_cold, t_hot));
  }
  if (!(b2 > b1) || betas_equal(b1, b2, options.beta_tolerance) || std::isnan(b2.value())) {
    throw Error(Errc::kNotActivatable, "virtual temperatures are not strictly ordered, " +
                                           describe_pair(t_cold, t_hot));
  }

  const std::size_t cap = options.max_denominator;
  auto below = [&](double p, double q) { return at_or_below_lower(t_cold, t_hot, p, q); };
  auto above = [&](double p, double q) { return at_or_above_upper(t_cold, t_hot, p, q); };

  Fraction left{0, 1};
  Fraction right{1, 0};
  for (;;) {
    const Fraction mid{left.p + right.p, left.q + right.q};
    if (mid.p > cap || mid.q > cap) {
      throw Error(Errc::kIntervalTooNarrow,
                  "no admissible copy counts up to " + std::to_string(cap) + ", " + describe_pair(t_cold, t_hot));
    }
    const double p = static_cast<double>(mid.p);
    const double q = static_cast<double>(mid.q);
    if (below(p, q)) {
      const std::size_t t = gallop(left, right, cap, below);
      left = {left.p + t * right.p, left.q + t * right.q};
    } else if (above(p, q)) {
      const std::size_t t = gallop(right, left, cap, above);
      right = {right.p + t * left.p, right.q + t * left.q};
    } else {
      if (!(composite_beta_closed_form(t_cold, t_hot, mid.p, mid.q).value() < 0.0)) {
        throw Error(Errc::kIntervalTooNarrow,
                    "criterion interval is below floating-point resolution, " + describe_pair(t_cold, t_hot));
      }
      return {mid.p, mid.q};
    }
  }
}

CompositeTransition composite_transition(const Transition& t_cold, const Transition& t_hot, std::size_t n,
                                         std::size_t k) {
  if (n == 0 || k == 0) throw Error(Errc::kInvalidArgument, "copy counts must be positive");
  const double nd1 = static_cast<double>(n) * t_cold.gap;
  const double kd2 = static_cast<double>(k) * t_hot.gap;
  const double gap = nd1 - kd2;
  if (std::abs(gap) <= kStrictGuard * (nd1 + kd2)) {
    throw Error(Errc::kDegenerateComposite, "n*D1 equals k*D2, " + describe_pair(t_cold, t_hot));
  }
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  CompositeTransition c;
  c.base_cold = t_cold;
  c.base_hot = t_hot;
  c.n = n;
  c.k = k;
  c.gap = gap;
  c.log_pop_hi = dn * std::log(t_cold.pop_hi) + dk * std::log(t_hot.pop_lo);
  c.log_pop_lo = dn * std::log(t_cold.pop_lo) + dk * std::log(t_hot.pop_hi);
  if (std::isinf(c.log_pop_hi) && std::isinf(c.log_pop_lo)) {
    throw Error(Errc::kZeroPopulation, "both composite levels are empty, " + describe_pair(t_cold, t_hot));
  }
  c.beta = VirtualTemp((c.log_pop_lo - c.log_pop_hi) / gap);
  return c;
}

ActivationCertificate make_certificate(const CompositeTransition& composite) {
  if (!(composite.gap > 0.0) || !(composite.beta.value() < 0.0)) {
    throw Error(Errc::kInvalidArgument, "a certificate needs a positive gap and a negative virtual temperature");
  }
  ActivationCertificate cert;
  cert.composite = composite;
  cert.total_copies = composite.n + composite.k;
  // gap * (e^hi - e^lo) = gap * e^hi * (1 - e^(lo - hi))
  cert.log_work = std::log(composite.gap) + composite.log_pop_hi +
                  std::log(-std::expm1(composite.log_pop_lo - composite.log_pop_hi));
  cert.work = std::exp(cert.log_work);
  cert.swap_level_hi.assign(composite.n, composite.base_cold.hi);
  cert.swap_level_lo.assign(composite.n, composite.base_cold.lo);
  cert.swap_level_hi.insert(cert.swap_level_hi.end(), composite.k, composite.base_hot.lo);
  cert.swap_level_lo.insert(cert.swap_level_lo.end(), composite.k, composite.base_hot.hi);
  return cert;
}

std::optional<ActivationCertificate> activation_certificate(const DiagonalSystem& sys,
                                                            const ActivationOptions& options) {
  if (is_completely_passive(sys, options.beta_tolerance)) return std::nullopt;
  const auto transitions = all_transitions(sys);

  if (!is_passive(sys)) {
    const Transition* best = nullptr;
    for (const Transition& t : transitions) {
      if (!(t.pop_hi > t.pop_lo)) continue;
      if (best == nullptr || t.swap_work() > best->swap_work()) best = &t;
    }
    if (best != nullptr) return make_certificate(single_copy_composite(*best));
  }

  std::optional<ActivationCertificate> best;
  std::optional<Error> narrow;
  for (const Transition& cold : transitions) {
    if (!cold.beta.is_finite() || cold.beta.value() < 0.0) continue;
    for (const Transition& hot : transitions) {
      if (!(hot.beta > cold.beta) || betas_equal(cold.beta, hot.beta, options.beta_tolerance)) continue;
      CopyCounts counts;
      try {
        counts = copy_counts_for_inversion(cold, hot, options);
      } catch (const Error& e) {
        if (e.code() != Errc::kIntervalTooNarrow) throw;
        if (!narrow) narrow = e;
        continue;
      }
      ActivationCertificate cert = make_certificate(composite_transition(cold, hot, counts.n, counts.k));
      if (!best || rank_of(cert) < rank_of(*best)) best = std::move(cert);
    }
  }
  if (!best && narrow) throw *narrow;
  return best;
}

}  // namespace vtemp
