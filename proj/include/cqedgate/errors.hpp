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

#ifndef CQEDGATE_ERRORS_HPP
#define CQEDGATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqedgate {

/// Raised when a caller violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coherent state does not fit in the requested photon-number cutoff.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_n_max)
      : std::runtime_error(what), required_n_max_(required_n_max) {}

  /// Smallest cutoff for which the discarded Poisson tail is acceptable.
  int required_n_max() const noexcept { return required_n_max_; }

 private:
  int required_n_max_;
};

/// The integrator lost norm beyond the configured tolerance.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& what, double norm_drift, double dt)
      : std::runtime_error(what), norm_drift_(norm_drift), dt_(dt) {}

  double norm_drift() const noexcept { return norm_drift_; }
  double dt() const noexcept { return dt_; }

 private:
  double norm_drift_;
  double dt_;
};

}  // namespace cqedgate

#endif  // CQEDGATE_ERRORS_HPP
