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

#ifndef CQEDGATE_DYNAMICS_HPP
#define CQEDGATE_DYNAMICS_HPP

// Fixed-step RK4 for i d(psi)/dt = H(t) psi in the interaction picture.
//
// Steps sit on the lattice t_k = k * dt measured from t = 0. Reaching a time
// that is not a lattice point takes one shorter step from the last lattice
// point, so evolve() and evolve_sampled() give bit-identical states.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "cqedgate/errors.hpp"
#include "cqedgate/hilbert.hpp"

namespace cqedgate {

struct IntegratorConfig {
  /// Unset means default_time_step().
  std::optional<double> dt;
  double norm_tolerance = 1e-9;
};

/// 2 pi / Omega_max / 200 with Omega_max = sqrt(8 g^2 (n_max+1) + max|Delta+-|^2).
/// Infinite when nothing couples (g = 0 and no detuning).
inline double default_time_step(const ModelParams& params, const SystemBasis& basis) {
  const double delta = std::max(std::abs(params.delta_plus), std::abs(params.delta_minus));
  const double omega_max =
      std::sqrt(8.0 * params.g * params.g * (basis.n_max() + 1) + delta * delta);
  if (omega_max == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::numbers::pi / omega_max / 200.0;
}

class Propagator {
 public:
  Propagator(const ModelParams& params, const SystemBasis& basis, const IntegratorConfig& cfg)
      : params_(params.validated()),
        basis_(basis),
        sqrt_n_(ladder_factors(basis)),
        dt_(cfg.dt ? *cfg.dt : default_time_step(params, basis)),
        norm_tolerance_(cfg.norm_tolerance) {
    if (!(dt_ > 0.0)) throw InvalidArgument("IntegratorConfig: dt must be > 0");
    if (!(norm_tolerance_ > 0.0)) {
      throw InvalidArgument("IntegratorConfig: norm_tolerance must be > 0");
    }
    const auto dim = static_cast<Eigen::Index>(basis.dim());
    for (auto* v : {&k1_, &k2_, &k3_, &k4_, &tmp_}) v->resize(dim);
  }

  double dt() const noexcept { return dt_; }

  /// Number of whole lattice steps that fit in [0, t].
  std::int64_t lattice_steps(double t) const {
    if (std::isinf(dt_)) return 0;
    auto k = static_cast<std::int64_t>(std::floor(t / dt_));
    while (k > 0 && static_cast<double>(k) * dt_ > t) --k;
    return k;
  }

  double lattice_time(std::int64_t k) const {
    return k == 0 ? 0.0 : static_cast<double>(k) * dt_;
  }

  /// Advances y from lattice point `from` to lattice point `to`.
  void advance_lattice(Eigen::VectorXcd& y, std::int64_t from, std::int64_t to) {
    for (std::int64_t k = from; k < to; ++k) step(y, lattice_time(k), dt_);
  }

  /// Finishes from lattice point k to time t >= lattice_time(k).
  void finish(Eigen::VectorXcd& y, std::int64_t k, double t) {
    const double t0 = lattice_time(k);
    const double h = t - t0;
    if (h > 0.0) step(y, t0, h);
  }

  void check_norm(const Eigen::VectorXcd& y, double initial_norm) const {
    const double drift = std::abs(y.norm() - initial_norm);
    if (!(drift <= norm_tolerance_)) {
      std::ostringstream msg;
      msg << "evolve: norm drift " << drift << " exceeds tolerance " << norm_tolerance_
          << " at dt=" << dt_;
      throw IntegrationFailure(msg.str(), drift, dt_);
    }
  }

 private:
  // y' = -i H(t) y
  void derivative(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& out) {
    apply_hamiltonian(params_, basis_, sqrt_n_, t, y, out);
    out *= Complex(0.0, -1.0);
  }

  void step(Eigen::VectorXcd& y, double t, double h) {
    derivative(t, y, k1_);
    tmp_ = y + (h / 2.0) * k1_;
    derivative(t + h / 2.0, tmp_, k2_);
    tmp_ = y + (h / 2.0) * k2_;
    derivative(t + h / 2.0, tmp_, k3_);
    tmp_ = y + h * k3_;
    derivative(t + h, tmp_, k4_);
    y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

  ModelParams params_;
  SystemBasis basis_;
  std::vector<double> sqrt_n_;
  double dt_;
  double norm_tolerance_;
  Eigen::VectorXcd k1_, k2_, k3_, k4_, tmp_;
};

namespace detail {

inline double checked_initial_norm(const StateVector& state0) {
  const double norm = state0.norm();
  if (!(std::abs(norm - 1.0) <= 1e-6)) {
    throw InvalidArgument("evolve: initial state is not normalized (norm " +
                          std::to_string(norm) + ")");
  }
  return norm;
}

}  // namespace detail

/// psi(t_final) from psi(0) = state0.
inline StateVector evolve(const StateVector& state0, const ModelParams& params, double t_final,
                          const IntegratorConfig& cfg = {}) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw InvalidArgument("evolve: t_final must be finite and >= 0");
  }
  const double norm0 = detail::checked_initial_norm(state0);
  Propagator prop(params, state0.basis(), cfg);
  Eigen::VectorXcd y = state0.amplitudes();
  const std::int64_t k = prop.lattice_steps(t_final);
  prop.advance_lattice(y, 0, k);
  prop.finish(y, k, t_final);
  prop.check_norm(y, norm0);
  return StateVector(state0.basis(), std::move(y));
}

/// States at every time of an ascending grid; element i equals
/// evolve(state0, params, t_grid[i], cfg).
inline std::vector<StateVector> evolve_sampled(const StateVector& state0,
                                               const ModelParams& params,
                                               const std::vector<double>& t_grid,
                                               const IntegratorConfig& cfg = {}) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || !std::isfinite(t_grid[i]) ||
        (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw InvalidArgument("evolve_sampled: time grid must be finite, >= 0 and ascending");
    }
  }
  const double norm0 = detail::checked_initial_norm(state0);
  Propagator prop(params, state0.basis(), cfg);
  std::vector<StateVector> out;
  out.reserve(t_grid.size());
  Eigen::VectorXcd lattice = state0.amplitudes();
  std::int64_t at = 0;
  for (double t : t_grid) {
    const std::int64_t k = prop.lattice_steps(t);
    prop.advance_lattice(lattice, at, k);
    at = k;
    Eigen::VectorXcd y = lattice;
    prop.finish(y, k, t);
    prop.check_norm(y, norm0);
    out.emplace_back(state0.basis(), std::move(y));
  }
  return out;
}

}  // namespace cqedgate

#endif  // CQEDGATE_DYNAMICS_HPP
