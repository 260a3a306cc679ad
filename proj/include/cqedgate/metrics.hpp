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

#ifndef CQEDGATE_METRICS_HPP
#define CQEDGATE_METRICS_HPP

// Phase-gate fidelity and the computational-block concurrence.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>
#include <vector>

#include "cqedgate/analytic.hpp"
#include "cqedgate/dynamics.hpp"
#include "cqedgate/errors.hpp"
#include "cqedgate/hilbert.hpp"

namespace cqedgate {

enum class Engine { analytic, numeric };

inline Engine parse_engine(std::string_view text) {
  if (text == "analytic") return Engine::analytic;
  if (text == "numeric") return Engine::numeric;
  throw InvalidArgument("unknown engine '" + std::string(text) + "'");
}

/// Diagonal amplitudes c_jk = <c,j,k|psi_jk(t)>, ordered 00, 01, 10, 11.
using GateAmplitudes = std::array<Complex, 4>;

inline constexpr std::array<std::array<int, 2>, 4> kComputationalInputs = {
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

/// Target phases in the order 00, 01, 10, 11. U2 is stored with its global
/// -1 factored out.
inline std::array<double, 4> target_phases(GateKind gate) {
  constexpr double pi = std::numbers::pi;
  if (gate == GateKind::U1) return {0.0, 0.0, 0.0, pi};
  return {0.0, pi, pi, pi};
}

inline GateAmplitudes analytic_amplitudes(const ModelParams& params, double t) {
  if (!params.symmetric()) {
    throw InvalidArgument("analytic engine requires delta_plus == delta_minus");
  }
  GateAmplitudes c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [j, k] = kComputationalInputs[i];
    c[i] = amplitude_cjk(params.g, params.delta_plus, t, j, k);
  }
  return c;
}

inline GateAmplitudes numeric_amplitudes(const ModelParams& params, double t,
                                         const IntegratorConfig& cfg = {}) {
  const SystemBasis basis(1);
  GateAmplitudes c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [j, k] = kComputationalInputs[i];
    const StateVector out = evolve(basis_state(basis, AtomLevel::c, j, k), params, t, cfg);
    c[i] = out.amplitude(AtomLevel::c, j, k);
  }
  return c;
}

/// F = |(1/4) sum_jk exp(-i phi_jk) c_jk|^2.
inline double fidelity_from_amplitudes(const GateAmplitudes& c, GateKind gate) {
  const auto phases = target_phases(gate);
  Complex overlap(0.0, 0.0);
  for (std::size_t i = 0; i < 4; ++i) overlap += std::polar(1.0, -phases[i]) * c[i];
  return std::norm(overlap / 4.0);
}

inline double gate_fidelity(const ModelParams& params, GateKind gate, double t, Engine engine,
                            const IntegratorConfig& cfg = {}) {
  const GateAmplitudes c =
      engine == Engine::analytic ? analytic_amplitudes(params, t) : numeric_amplitudes(params, t, cfg);
  return fidelity_from_amplitudes(c, gate);
}

/// 2 |c00 c11 - c01 c10| over the zero/one-photon amplitudes of |c>, taken
/// as-is from the full state.
inline double concurrence_computational(const StateVector& state) {
  const Complex c00 = state.amplitude(AtomLevel::c, 0, 0);
  const Complex c01 = state.amplitude(AtomLevel::c, 0, 1);
  const Complex c10 = state.amplitude(AtomLevel::c, 1, 0);
  const Complex c11 = state.amplitude(AtomLevel::c, 1, 1);
  return 2.0 * std::abs(c00 * c11 - c01 * c10);
}

/// Applies the exact target phase pattern to the |c,j,k> block, j,k in {0,1}.
inline StateVector apply_ideal_gate(const StateVector& state, GateKind gate) {
  StateVector out = state;
  const auto phases = target_phases(gate);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [j, k] = kComputationalInputs[i];
    out.set_amplitude(AtomLevel::c, j, k,
                      std::polar(1.0, phases[i]) * state.amplitude(AtomLevel::c, j, k));
  }
  return out;
}

}  // namespace cqedgate

#endif  // CQEDGATE_METRICS_HPP
