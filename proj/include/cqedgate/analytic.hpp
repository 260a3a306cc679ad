// Copyright 2026 The cqedgate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQEDGATE_ANALYTIC_HPP
#define CQEDGATE_ANALYTIC_HPP

// Closed-form dynamics of the computational basis at two-photon resonance and
// the integer search for gate timings.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cqedgate/errors.hpp"

namespace cqedgate {

/// U1 flips the sign of |1,1>; U2 flips every state except |0,0> (equal, up
/// to a global phase, to a sign flip on |0,0>).
enum class GateKind : int { U1 = 1, U2 = 2 };

inline std::string_view to_string(GateKind gate) {
  return gate == GateKind::U1 ? "U1" : "U2";
}

inline GateKind parse_gate(std::string_view text) {
  if (text == "u1" || text == "U1") return GateKind::U1;
  if (text == "u2" || text == "U2") return GateKind::U2;
  throw InvalidArgument("unknown gate '" + std::string(text) + "' (expected u1 or u2)");
}

/// Generalized Rabi frequencies (Omega_01, Omega_11) = (sqrt(4g^2+D^2), sqrt(8g^2+D^2)).
inline std::pair<double, double> rabi_frequencies(double g, double delta) {
  if (!(g >= 0.0)) throw InvalidArgument("rabi_frequencies: g must be >= 0");
  return {std::sqrt(4.0 * g * g + delta * delta), std::sqrt(8.0 * g * g + delta * delta)};
}

/// <c,j,k|psi(t)> for the input |c,j,k>, j,k in {0,1}, at Delta+ = Delta- = delta.
inline std::complex<double> amplitude_cjk(double g, double delta, double t, int j, int k) {
  if ((j != 0 && j != 1) || (k != 0 && k != 1)) {
    throw InvalidArgument("amplitude_cjk: j and k must be 0 or 1");
  }
  if (j == 0 && k == 0) return {1.0, 0.0};
  const auto [omega_01, omega_11] = rabi_frequencies(g, delta);
  const double omega = (j == 1 && k == 1) ? omega_11 : omega_01;
  if (omega == 0.0) return {1.0, 0.0};
  const double ratio = delta / omega;
  const std::complex<double> i(0.0, 1.0);
  return std::exp(i * (delta * t / 2.0)) / 2.0 *
         ((1.0 - ratio) * std::exp(i * (omega * t / 2.0)) +
          (1.0 + ratio) * std::exp(-i * (omega * t / 2.0)));
}

/// One admissible integer solution of the gate-timing conditions, in units
/// where g = 1.
struct GateSolution {
  GateKind gate = GateKind::U1;
  int m = 0;
  int n = 0;
  double p_star = 0.0;        // real root of (2p+1)^2 = rhs
  double delta_over_g = 0.0;  // detuning that makes Delta t / 2 = 2 pi m
  double gt = 0.0;            // interaction time
  double epsilon = 0.0;       // |sqrt(rhs) - nearest odd integer|

  /// Nearest integer p, i.e. (nearest odd to 2p*+1 - 1) / 2.
  int p() const { return static_cast<int>(std::lround(p_star)); }

  double omega_01_over_g() const { return std::sqrt(4.0 + delta_over_g * delta_over_g); }
  double omega_11_over_g() const { return std::sqrt(8.0 + delta_over_g * delta_over_g); }

  /// 2p+1 > 2n > 2m >= 0 (U1) or 2p+1 > 2n+1 > 2m >= 0 (U2).
  bool satisfies_ordering() const {
    const int odd = 2 * p() + 1;
    if (gate == GateKind::U1) return odd > 2 * n && 2 * n > 2 * m && m >= 0;
    return odd > 2 * n + 1 && 2 * n + 1 > 2 * m && m >= 0;
  }
};

namespace detail {

inline double nearest_odd(double x) { return 2.0 * std::round((x - 1.0) / 2.0) + 1.0; }

inline void check_indices(GateKind gate, int m, int n) {
  const bool ok = gate == GateKind::U1 ? (m >= 0 && m < n) : (m >= 0 && n >= 0 && 2 * m < 2 * n + 1);
  if (!ok) {
    throw InvalidArgument("solution_parameters: (m=" + std::to_string(m) + ", n=" +
                          std::to_string(n) + ") violates the " + std::string(to_string(gate)) +
                          " ordering");
  }
}

}  // namespace detail

/// Detuning, gate time and residual for the integers (m, n).
///
///   U1: Delta/g = 2m / s,  gt = 2 pi s,  s = sqrt(n^2 - m^2),  (2p+1)^2 = 8n^2 - 4m^2
///   U2: Delta/g = 4m / s,  gt = pi s,    s = sqrt((2n+1)^2 - 4m^2),
///       (2p+1)^2 = 2(2n+1)^2 - 4m^2
inline GateSolution solution_parameters(GateKind gate, int m, int n) {
  detail::check_indices(gate, m, n);
  const double md = m;
  const double nd = n;
  GateSolution s;
  s.gate = gate;
  s.m = m;
  s.n = n;
  double rhs = 0.0;
  if (gate == GateKind::U1) {
    const double root = std::sqrt(nd * nd - md * md);
    s.delta_over_g = 2.0 * md / root;
    s.gt = 2.0 * std::numbers::pi * root;
    rhs = 8.0 * nd * nd - 4.0 * md * md;
  } else {
    const double odd_n = 2.0 * nd + 1.0;
    const double root = std::sqrt(odd_n * odd_n - 4.0 * md * md);
    s.delta_over_g = 4.0 * md / root;
    s.gt = std::numbers::pi * root;
    rhs = 2.0 * odd_n * odd_n - 4.0 * md * md;
  }
  const double two_p_plus_one = std::sqrt(rhs);
  s.p_star = (two_p_plus_one - 1.0) / 2.0;
  s.epsilon = std::abs(two_p_plus_one - detail::nearest_odd(two_p_plus_one));
  return s;
}

inline constexpr int kDefaultMaxN = 30;
/// Keeps exactly the classic ten-row table below gt = 100 for max_n = 30.
inline constexpr double kDefaultEpsilonMax = 0.03;

/// Ascending gt, ties by (gate, m, n).
inline bool solution_order(const GateSolution& lhs, const GateSolution& rhs) {
  return std::tuple(lhs.gt, static_cast<int>(lhs.gate), lhs.m, lhs.n) <
         std::tuple(rhs.gt, static_cast<int>(rhs.gate), rhs.m, rhs.n);
}

namespace detail {

inline void collect(GateKind gate, int max_n, double epsilon_max, double gt_max,
                    std::vector<GateSolution>& out) {
  const int n_min = gate == GateKind::U1 ? 1 : 0;
  for (int n = n_min; n <= max_n; ++n) {
    const int m_end = gate == GateKind::U1 ? n - 1 : n;
    for (int m = 0; m <= m_end; ++m) {
      GateSolution s = solution_parameters(gate, m, n);
      if (s.epsilon <= epsilon_max && s.gt <= gt_max && s.satisfies_ordering()) {
        out.push_back(s);
      }
    }
  }
}

inline void check_search_args(int max_n, double epsilon_max) {
  if (max_n < 1) throw InvalidArgument("search_solutions: max_n must be >= 1");
  if (!(epsilon_max > 0.0)) throw InvalidArgument("search_solutions: epsilon_max must be > 0");
}

}  // namespace detail

/// All (m, n) with n <= max_n whose residual is within epsilon_max, sorted by
/// interaction time. gt_max optionally drops the slow tail.
inline std::vector<GateSolution> search_solutions(
    GateKind gate, int max_n, double epsilon_max,
    double gt_max = std::numeric_limits<double>::infinity()) {
  detail::check_search_args(max_n, epsilon_max);
  std::vector<GateSolution> out;
  detail::collect(gate, max_n, epsilon_max, gt_max, out);
  std::sort(out.begin(), out.end(), solution_order);
  return out;
}

/// Both gates merged into one table.
inline std::vector<GateSolution> search_all_gates(
    int max_n = kDefaultMaxN, double epsilon_max = kDefaultEpsilonMax,
    double gt_max = std::numeric_limits<double>::infinity()) {
  detail::check_search_args(max_n, epsilon_max);
  std::vector<GateSolution> out;
  detail::collect(GateKind::U1, max_n, epsilon_max, gt_max, out);
  detail::collect(GateKind::U2, max_n, epsilon_max, gt_max, out);
  std::sort(out.begin(), out.end(), solution_order);
  return out;
}

/// Row `row` (1-based) of the default table.
inline GateSolution default_table_row(int row) {
  const auto table = search_all_gates();
  if (row < 1 || static_cast<std::size_t>(row) > table.size()) {
    throw InvalidArgument("table row " + std::to_string(row) + " out of range 1.." +
                          std::to_string(table.size()));
  }
  return table[static_cast<std::size_t>(row - 1)];
}

}  // namespace cqedgate

#endif  // CQEDGATE_ANALYTIC_HPP
