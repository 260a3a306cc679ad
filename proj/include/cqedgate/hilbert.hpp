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

#ifndef CQEDGATE_HILBERT_HPP
#define CQEDGATE_HILBERT_HPP

// Truncated product space |atom, n+, n-> of a V-type atom and the two
// circular polarizations of one cavity mode, plus the interaction-picture
// Hamiltonian that couples them.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cqedgate/errors.hpp"

namespace cqedgate {

using Complex = std::complex<double>;

/// Atomic levels. |c> is the common lower level; |a> couples to sigma+
/// photons and |b> to sigma- photons.
enum class AtomLevel : int { a = 0, b = 1, c = 2 };

inline constexpr std::array<AtomLevel, 3> kAtomLevels = {AtomLevel::a, AtomLevel::b,
                                                         AtomLevel::c};

inline char to_char(AtomLevel level) {
  switch (level) {
    case AtomLevel::a: return 'a';
    case AtomLevel::b: return 'b';
    case AtomLevel::c: return 'c';
  }
  return '?';
}

/// Quantum numbers of one product basis vector.
struct BasisLabel {
  AtomLevel atom;
  int n_plus;
  int n_minus;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Product basis with at most n_max photons per polarization.
///
/// Flat indices are atom-major, then n+, then n-:
///   index = (atom * (n_max+1) + n+) * (n_max+1) + n-
class SystemBasis {
 public:
  explicit SystemBasis(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
      throw InvalidArgument("SystemBasis: n_max must be >= 1 (got " + std::to_string(n_max) +
                            ")");
    }
  }

  int n_max() const noexcept { return n_max_; }
  int ladder() const noexcept { return n_max_ + 1; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(3 * ladder() * ladder());
  }

  bool contains(AtomLevel atom, int n_plus, int n_minus) const noexcept {
    (void)atom;
    return n_plus >= 0 && n_minus >= 0 && n_plus <= n_max_ && n_minus <= n_max_;
  }

  std::size_t index(AtomLevel atom, int n_plus, int n_minus) const {
    if (!contains(atom, n_plus, n_minus)) {
      throw InvalidArgument("SystemBasis: photon numbers (" + std::to_string(n_plus) + ", " +
                            std::to_string(n_minus) + ") outside cutoff " +
                            std::to_string(n_max_));
    }
    return unchecked_index(atom, n_plus, n_minus);
  }

  std::size_t unchecked_index(AtomLevel atom, int n_plus, int n_minus) const noexcept {
    const auto l = static_cast<std::size_t>(ladder());
    return (static_cast<std::size_t>(atom) * l + static_cast<std::size_t>(n_plus)) * l +
           static_cast<std::size_t>(n_minus);
  }

  BasisLabel label(std::size_t index) const {
    if (index >= dim()) {
      throw InvalidArgument("SystemBasis: index " + std::to_string(index) + " out of range");
    }
    const auto l = static_cast<std::size_t>(ladder());
    const auto n_minus = static_cast<int>(index % l);
    const auto n_plus = static_cast<int>((index / l) % l);
    const auto atom = static_cast<AtomLevel>(index / (l * l));
    return {atom, n_plus, n_minus};
  }

  friend bool operator==(const SystemBasis&, const SystemBasis&) = default;

 private:
  int n_max_;
};

inline SystemBasis build_basis(int n_max) { return SystemBasis(n_max); }

/// Complex amplitudes over a SystemBasis.
class StateVector {
 public:
  explicit StateVector(SystemBasis basis)
      : basis_(basis), amplitudes_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()))) {}

  StateVector(SystemBasis basis, Eigen::VectorXcd amplitudes)
      : basis_(basis), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dim()) {
      throw InvalidArgument("StateVector: amplitude count does not match basis dimension");
    }
  }

  const SystemBasis& basis() const noexcept { return basis_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() noexcept { return amplitudes_; }

  Complex amplitude(AtomLevel atom, int n_plus, int n_minus) const {
    return amplitudes_[static_cast<Eigen::Index>(basis_.index(atom, n_plus, n_minus))];
  }
  void set_amplitude(AtomLevel atom, int n_plus, int n_minus, Complex value) {
    amplitudes_[static_cast<Eigen::Index>(basis_.index(atom, n_plus, n_minus))] = value;
  }

  double norm() const { return amplitudes_.norm(); }

  /// <this|other>
  Complex inner(const StateVector& other) const {
    if (!(basis_ == other.basis_)) {
      throw InvalidArgument("StateVector::inner: basis mismatch");
    }
    return amplitudes_.dot(other.amplitudes_);
  }

 private:
  SystemBasis basis_;
  Eigen::VectorXcd amplitudes_;
};

/// |atom, n+, n-> as a StateVector.
inline StateVector basis_state(const SystemBasis& basis, AtomLevel atom, int n_plus,
                               int n_minus) {
  StateVector psi(basis);
  psi.set_amplitude(atom, n_plus, n_minus, Complex(1.0, 0.0));
  return psi;
}

/// Couplings g and detunings Delta+- = omega_{ac,bc} - omega_cavity, all in
/// the same angular-frequency units (g = 1 for dimensionless runs).
struct ModelParams {
  double g = 1.0;
  double delta_plus = 0.0;
  double delta_minus = 0.0;

  /// Two-photon resonance, Delta+ == Delta-.
  bool symmetric() const noexcept { return delta_plus == delta_minus; }

  static ModelParams resonant(double g, double delta) {
    return ModelParams{g, delta, delta}.validated();
  }

  ModelParams validated() const {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw InvalidArgument("ModelParams: coupling g must be finite and >= 0");
    }
    if (!std::isfinite(delta_plus) || !std::isfinite(delta_minus)) {
      throw InvalidArgument("ModelParams: detunings must be finite");
    }
    return *this;
  }
};

/// Interaction-picture Hamiltonian at time t (hbar = 1):
///   <a,n,m|H|c,n+1,m> = g sqrt(n+1) exp(-i Delta+ t)
///   <b,n,m|H|c,n,m+1> = g sqrt(m+1) exp(-i Delta- t)
/// plus Hermitian conjugates. Dense; intended for inspection and tests, the
/// integrator uses apply_hamiltonian().
inline Eigen::MatrixXcd hamiltonian_at(const ModelParams& params, const SystemBasis& basis,
                                       double t) {
  params.validated();
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const Complex phase_plus = std::polar(1.0, -params.delta_plus * t);
  const Complex phase_minus = std::polar(1.0, -params.delta_minus * t);
  const int n_max = basis.n_max();
  for (int np = 0; np <= n_max; ++np) {
    for (int nm = 0; nm <= n_max; ++nm) {
      const auto c = static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::c, np, nm));
      if (np > 0) {
        const auto a =
            static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::a, np - 1, nm));
        const Complex element = params.g * std::sqrt(static_cast<double>(np)) * phase_plus;
        h(a, c) = element;
        h(c, a) = std::conj(element);
      }
      if (nm > 0) {
        const auto b =
            static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::b, np, nm - 1));
        const Complex element = params.g * std::sqrt(static_cast<double>(nm)) * phase_minus;
        h(b, c) = element;
        h(c, b) = std::conj(element);
      }
    }
  }
  return h;
}

/// Precomputed sqrt(n) for the photon ladder, shared by the sparse action.
inline std::vector<double> ladder_factors(const SystemBasis& basis) {
  std::vector<double> factors(static_cast<std::size_t>(basis.ladder()));
  for (std::size_t n = 0; n < factors.size(); ++n) {
    factors[n] = std::sqrt(static_cast<double>(n));
  }
  return factors;
}

/// out = H(t) * in without forming H. Same matrix elements as hamiltonian_at().
inline void apply_hamiltonian(const ModelParams& params, const SystemBasis& basis,
                              const std::vector<double>& sqrt_n, double t,
                              const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  out.setZero(in.size());
  const Complex phase_plus = std::polar(params.g, -params.delta_plus * t);
  const Complex phase_minus = std::polar(params.g, -params.delta_minus * t);
  const int n_max = basis.n_max();
  for (int np = 0; np <= n_max; ++np) {
    for (int nm = 0; nm <= n_max; ++nm) {
      const auto c = static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::c, np, nm));
      const Complex psi_c = in[c];
      if (np > 0) {
        const auto a =
            static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::a, np - 1, nm));
        const Complex element = sqrt_n[static_cast<std::size_t>(np)] * phase_plus;
        out[a] += element * psi_c;
        out[c] += std::conj(element) * in[a];
      }
      if (nm > 0) {
        const auto b =
            static_cast<Eigen::Index>(basis.unchecked_index(AtomLevel::b, np, nm - 1));
        const Complex element = sqrt_n[static_cast<std::size_t>(nm)] * phase_minus;
        out[b] += element * psi_c;
        out[c] += std::conj(element) * in[b];
      }
    }
  }
}

/// Largest discarded Poisson tail accepted by coherent_product_state().
inline constexpr double kCoherentTailTolerance = 1e-6;

/// Probability that a coherent state of mean photon number `mean` holds more
/// than n_max photons.
inline double poisson_tail_above(double mean, int n_max) {
  if (mean == 0.0) return 0.0;
  // Sum the tail term by term; 1 - head would lose the small tails we test against.
  double term = std::exp(-mean);
  for (int k = 1; k <= n_max; ++k) term *= mean / k;
  double tail = 0.0;
  for (int k = n_max + 1; k < n_max + 100000; ++k) {
    term *= mean / k;
    tail += term;
    if (k > mean && term <= 1e-17 * tail) break;
  }
  return tail;
}

/// Smallest cutoff with Poisson tail below kCoherentTailTolerance.
inline int required_cutoff(double mean) {
  int n = 1;
  while (poisson_tail_above(mean, n) >= kCoherentTailTolerance) ++n;
  return n;
}

/// |c> (x) |alpha+> (x) |alpha->, truncated to the basis and renormalized.
inline StateVector coherent_product_state(Complex alpha_plus, Complex alpha_minus,
                                          const SystemBasis& basis) {
  const double mean_plus = std::norm(alpha_plus);
  const double mean_minus = std::norm(alpha_minus);
  const double tail =
      std::max(poisson_tail_above(mean_plus, basis.n_max()), poisson_tail_above(mean_minus, basis.n_max()));
  if (tail >= kCoherentTailTolerance) {
    const int needed = std::max(required_cutoff(mean_plus), required_cutoff(mean_minus));
    throw TruncationError("coherent_product_state: Poisson tail " + std::to_string(tail) +
                              " beyond n_max=" + std::to_string(basis.n_max()) +
                              "; need n_max >= " + std::to_string(needed),
                          needed);
  }
  const int ladder = basis.ladder();
  std::vector<Complex> plus(static_cast<std::size_t>(ladder));
  std::vector<Complex> minus(static_cast<std::size_t>(ladder));
  plus[0] = std::exp(-0.5 * mean_plus);
  minus[0] = std::exp(-0.5 * mean_minus);
  for (int n = 1; n < ladder; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    plus[static_cast<std::size_t>(n)] = plus[static_cast<std::size_t>(n - 1)] * alpha_plus / root;
    minus[static_cast<std::size_t>(n)] =
        minus[static_cast<std::size_t>(n - 1)] * alpha_minus / root;
  }
  StateVector psi(basis);
  for (int np = 0; np < ladder; ++np) {
    for (int nm = 0; nm < ladder; ++nm) {
      psi.set_amplitude(AtomLevel::c, np, nm,
                        plus[static_cast<std::size_t>(np)] * minus[static_cast<std::size_t>(nm)]);
    }
  }
  const double norm = psi.norm();
  if (norm != 1.0) psi.amplitudes() /= norm;
  return psi;
}

/// (<B01|psi>, <D01|psi>) with |B01>, |D01> = (|a,0,1> +- |b,1,0>)/sqrt(2).
inline std::pair<Complex, Complex> bright_dark_components(const StateVector& state) {
  const Complex a01 = state.amplitude(AtomLevel::a, 0, 1);
  const Complex b10 = state.amplitude(AtomLevel::b, 1, 0);
  const double s = 1.0 / std::sqrt(2.0);
  return {s * (a01 + b10), s * (a01 - b10)};
}

}  // namespace cqedgate

#endif  // CQEDGATE_HILBERT_HPP
