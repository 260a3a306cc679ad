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

#ifndef CQEDGATE_EXPERIMENTS_HPP
#define CQEDGATE_EXPERIMENTS_HPP

// Fidelity traces, velocity / stray-field robustness maps and concurrence
// maps over coherent inputs.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqedgate/analytic.hpp"
#include "cqedgate/dynamics.hpp"
#include "cqedgate/errors.hpp"
#include "cqedgate/hilbert.hpp"
#include "cqedgate/metrics.hpp"
#include "cqedgate/parallel.hpp"

namespace cqedgate {

/// Uniformly sampled, named and unit-tagged range.
struct Axis {
  std::string name;
  std::string unit;
  double min = 0.0;
  double max = 0.0;
  int samples = 1;

  Axis() = default;
  Axis(std::string name_, std::string unit_, double min_, double max_, int samples_)
      : name(std::move(name_)), unit(std::move(unit_)), min(min_), max(max_), samples(samples_) {
    if (samples < 1) throw InvalidArgument("Axis '" + name + "': samples must be >= 1");
    if (!std::isfinite(min) || !std::isfinite(max) || max < min) {
      throw InvalidArgument("Axis '" + name + "': need finite min <= max");
    }
  }

  // Written so that a range symmetric about zero samples exact negatives.
  double at(int i) const {
    if (samples == 1) return min;
    const double span = samples - 1;
    return (min * (span - i) + max * i) / span;
  }

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) v[static_cast<std::size_t>(i)] = at(i);
    return v;
  }

  /// Same samples expressed in another unit (value * factor).
  Axis rescaled(double factor, std::string new_unit) const {
    Axis a = *this;
    a.min = min * factor;
    a.max = max * factor;
    a.unit = std::move(new_unit);
    return a;
  }
};

/// Values on a 1-D axis or a 2-D product of axes, stored x-major.
struct ExperimentGrid {
  Axis x_axis;
  std::optional<Axis> y_axis;
  std::string value_name;
  std::vector<double> values;

  int nx() const { return x_axis.samples; }
  int ny() const { return y_axis ? y_axis->samples : 1; }

  double& at(int ix, int iy = 0) {
    return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(ny()) +
                  static_cast<std::size_t>(iy)];
  }
  double at(int ix, int iy = 0) const {
    return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(ny()) +
                  static_cast<std::size_t>(iy)];
  }
};

/// Constants for converting the dimensionless model to a real apparatus.
struct PhysicalSetup {
  double g_hz = 5.0e4;           // g / 2 pi
  double cavity_length_m = 0.04;  // effective length crossed by the atom
  double g_J = 1.5;
  double m_J = 1.0;
  double mu_B = 9.2740100783e-24;  // J/T
  double hbar = 1.054571817e-34;   // J s

  /// Rydberg atoms in a microwave cavity.
  static PhysicalSetup microwave() { return {}; }

  /// Trapped atom in an optical micro-cavity; the length is only used for
  /// transit-time conversions and is kept at the microwave value.
  static PhysicalSetup optical() {
    PhysicalSetup s;
    s.g_hz = 2.5e7;
    return s;
  }

  double g_angular() const { return 2.0 * std::numbers::pi * g_hz; }

  void validate() const {
    if (!(g_hz > 0.0)) throw InvalidArgument("PhysicalSetup: g_hz must be > 0");
    if (!(cavity_length_m > 0.0)) {
      throw InvalidArgument("PhysicalSetup: cavity_length_m must be > 0");
    }
  }

  /// Atomic velocity whose transit time L / v equals the solution's gate time.
  double velocity_for(const GateSolution& solution) const {
    return cavity_length_m * g_angular() / solution.gt;
  }
};

inline constexpr double kTeslaPerMilliGauss = 1e-7;

/// Zeeman shift Delta+ = mu_B g_J m_J B / hbar in rad/s. B is the signed field
/// component along the cavity axis; the opposite level moves by -Delta+.
inline double bfield_to_detuning(double b_tesla, const PhysicalSetup& setup) {
  return setup.mu_B * setup.g_J * setup.m_J * b_tesla / setup.hbar;
}

/// F sampled on gt in [0, gt_max]. params.g sets the time scale.
inline ExperimentGrid fidelity_trace(const ModelParams& params, GateKind gate, double gt_max,
                                     int samples, Engine engine = Engine::numeric,
                                     const IntegratorConfig& cfg = {}) {
  if (samples < 2) throw InvalidArgument("fidelity_trace: samples must be >= 2");
  if (!(params.g > 0.0)) throw InvalidArgument("fidelity_trace: g must be > 0");
  if (!(gt_max >= 0.0)) throw InvalidArgument("fidelity_trace: gt_max must be >= 0");
  if (engine == Engine::analytic && !params.symmetric()) {
    throw InvalidArgument("analytic engine requires delta_plus == delta_minus");
  }
  ExperimentGrid grid;
  grid.x_axis = Axis("gt", "1", 0.0, gt_max, samples);
  grid.value_name = "fidelity";
  grid.values.resize(static_cast<std::size_t>(samples));

  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) times[static_cast<std::size_t>(i)] = grid.x_axis.at(i) / params.g;

  std::vector<GateAmplitudes> amps(times.size());
  if (engine == Engine::analytic) {
    for (std::size_t s = 0; s < times.size(); ++s) amps[s] = analytic_amplitudes(params, times[s]);
  } else {
    const SystemBasis basis(1);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto [j, k] = kComputationalInputs[i];
      const auto states = evolve_sampled(basis_state(basis, AtomLevel::c, j, k), params, times, cfg);
      for (std::size_t s = 0; s < times.size(); ++s) {
        amps[s][i] = states[s].amplitude(AtomLevel::c, j, k);
      }
    }
  }
  for (std::size_t s = 0; s < times.size(); ++s) {
    grid.values[s] = fidelity_from_amplitudes(amps[s], gate);
  }
  return grid;
}

/// Fidelity of `solution` for an atom crossing the cavity at speed v under a
/// uniform field B. x axis: v in m/s; y axis: B in tesla. Each cell uses
/// constant coupling during t = L / v and Delta+- = Delta_solution +- Delta_B.
inline ExperimentGrid velocity_bfield_map(const PhysicalSetup& setup, const GateSolution& solution,
                                          const Axis& velocity, const Axis& bfield,
                                          const IntegratorConfig& cfg = {}, unsigned workers = 0) {
  setup.validate();
  if (!(velocity.min > 0.0)) {
    throw InvalidArgument("velocity_bfield_map: velocities must be strictly positive");
  }
  ExperimentGrid grid;
  grid.x_axis = velocity;
  grid.y_axis = bfield;
  grid.value_name = "fidelity";
  grid.values.resize(static_cast<std::size_t>(grid.nx()) * static_cast<std::size_t>(grid.ny()));

  const double g = setup.g_angular();
  const double base = solution.delta_over_g * g;
  const int ny = grid.ny();
  parallel_for(
      grid.values.size(),
      [&](std::size_t cell) {
        const int ix = static_cast<int>(cell / static_cast<std::size_t>(ny));
        const int iy = static_cast<int>(cell % static_cast<std::size_t>(ny));
        const double t = setup.cavity_length_m / velocity.at(ix);
        const double shift = bfield_to_detuning(bfield.at(iy), setup);
        const ModelParams params{g, base + shift, base - shift};
        grid.values[cell] = gate_fidelity(params, solution.gate, t, Engine::numeric, cfg);
      },
      workers);
  return grid;
}

/// Concurrence after the gate acts on |c> (x) |sqrt(N+)> (x) |sqrt(N-)>, for
/// mean photon numbers N+- on `mean_photons` (both axes). Dimensionless with
/// coupling g.
inline ExperimentGrid concurrence_map(const GateSolution& solution, const Axis& mean_photons,
                                      int n_max, double g = 1.0,
                                      const IntegratorConfig& cfg = {}, unsigned workers = 0) {
  if (!(mean_photons.min >= 0.0)) {
    throw InvalidArgument("concurrence_map: mean photon numbers must be >= 0");
  }
  if (!(g > 0.0)) throw InvalidArgument("concurrence_map: g must be > 0");
  const SystemBasis basis(n_max);
  // Fail on truncation before spending time on any cell.
  (void)coherent_product_state(std::sqrt(mean_photons.max), std::sqrt(mean_photons.max), basis);

  ExperimentGrid grid;
  grid.x_axis = mean_photons;
  grid.x_axis.name = "mean_photons_plus";
  grid.y_axis = mean_photons;
  grid.y_axis->name = "mean_photons_minus";
  grid.value_name = "concurrence";
  grid.values.resize(static_cast<std::size_t>(grid.nx()) * static_cast<std::size_t>(grid.ny()));

  const ModelParams params = ModelParams::resonant(g, solution.delta_over_g * g);
  const double t = solution.gt / g;
  const int ny = grid.ny();
  parallel_for(
      grid.values.size(),
      [&](std::size_t cell) {
        const int ix = static_cast<int>(cell / static_cast<std::size_t>(ny));
        const int iy = static_cast<int>(cell % static_cast<std::size_t>(ny));
        const StateVector psi0 = coherent_product_state(
            std::sqrt(mean_photons.at(ix)), std::sqrt(mean_photons.at(iy)), basis);
        grid.values[cell] = concurrence_computational(evolve(psi0, params, t, cfg));
      },
      workers);
  return grid;
}

}  // namespace cqedgate

#endif  // CQEDGATE_EXPERIMENTS_HPP
