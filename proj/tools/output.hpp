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

#ifndef CQEDGATE_TOOLS_OUTPUT_HPP
#define CQEDGATE_TOOLS_OUTPUT_HPP

// CSV / JSON serialization for the command-line front end. Every real number
// is written with 12 significant digits.

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "cqedgate/cqedgate.hpp"
#include "json.hpp"

namespace cqedgate::io {

using ordered_json = nlohmann::ordered_json;

inline std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

/// The double closest to the 12-digit rendering, so JSON output carries the
/// same digits as the CSV output.
inline double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

inline std::string axis_label(const Axis& axis) { return axis.name + " [" + axis.unit + "]"; }

inline void write_grid_csv(std::ostream& os, const ExperimentGrid& grid) {
  os << "# x: " << axis_label(grid.x_axis);
  if (grid.y_axis) os << ", y: " << axis_label(*grid.y_axis);
  os << ", value: " << grid.value_name << "\n";
  if (grid.y_axis) {
    os << "x,y,value\n";
    for (int ix = 0; ix < grid.nx(); ++ix) {
      for (int iy = 0; iy < grid.ny(); ++iy) {
        os << format_number(grid.x_axis.at(ix)) << ',' << format_number(grid.y_axis->at(iy)) << ','
           << format_number(grid.at(ix, iy)) << '\n';
      }
    }
  } else {
    os << "x,value\n";
    for (int ix = 0; ix < grid.nx(); ++ix) {
      os << format_number(grid.x_axis.at(ix)) << ',' << format_number(grid.at(ix)) << '\n';
    }
  }
}

inline ordered_json axis_json(const Axis& axis) {
  return ordered_json{{"name", axis.name},
                      {"unit", axis.unit},
                      {"min", rounded(axis.min)},
                      {"max", rounded(axis.max)},
                      {"samples", axis.samples}};
}

inline void write_grid_json(std::ostream& os, const ExperimentGrid& grid) {
  ordered_json j;
  j["x_axis"] = axis_json(grid.x_axis);
  if (grid.y_axis) j["y_axis"] = axis_json(*grid.y_axis);
  j["value"] = grid.value_name;
  ordered_json rows = ordered_json::array();
  for (int ix = 0; ix < grid.nx(); ++ix) {
    if (grid.y_axis) {
      ordered_json row = ordered_json::array();
      for (int iy = 0; iy < grid.ny(); ++iy) row.push_back(rounded(grid.at(ix, iy)));
      rows.push_back(std::move(row));
    } else {
      rows.push_back(rounded(grid.at(ix)));
    }
  }
  j["values"] = std::move(rows);
  os << j.dump(2) << '\n';
}

inline ordered_json solution_json(const GateSolution& s) {
  return ordered_json{{"gate", std::string(to_string(s.gate))},
                      {"m", s.m},
                      {"n", s.n},
                      {"p_star", rounded(s.p_star)},
                      {"delta_over_g", rounded(s.delta_over_g)},
                      {"gt", rounded(s.gt)},
                      {"epsilon", rounded(s.epsilon)}};
}

inline void write_solutions_json(std::ostream& os, const std::vector<GateSolution>& table) {
  ordered_json j = ordered_json::array();
  for (const auto& s : table) j.push_back(solution_json(s));
  os << j.dump(2) << '\n';
}

inline void write_solutions_csv(std::ostream& os, const std::vector<GateSolution>& table) {
  os << "gate,m,n,p_star,delta_over_g,gt,epsilon\n";
  for (const auto& s : table) {
    os << to_string(s.gate) << ',' << s.m << ',' << s.n << ',' << format_number(s.p_star) << ','
       << format_number(s.delta_over_g) << ',' << format_number(s.gt) << ','
       << format_number(s.epsilon) << '\n';
  }
}

inline void write_state_csv(std::ostream& os, const StateVector& state, const std::string& comment) {
  os << "# " << comment << "\n";
  os << "atom,n_plus,n_minus,re,im\n";
  const auto& basis = state.basis();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const BasisLabel l = basis.label(i);
    const Complex amp = state.amplitudes()[static_cast<Eigen::Index>(i)];
    os << to_char(l.atom) << ',' << l.n_plus << ',' << l.n_minus << ',' << format_number(amp.real())
       << ',' << format_number(amp.imag()) << '\n';
  }
}

inline void write_state_json(std::ostream& os, const StateVector& state) {
  ordered_json j = ordered_json::array();
  const auto& basis = state.basis();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const BasisLabel l = basis.label(i);
    const Complex amp = state.amplitudes()[static_cast<Eigen::Index>(i)];
    j.push_back(ordered_json{{"atom", std::string(1, to_char(l.atom))},
                             {"n_plus", l.n_plus},
                             {"n_minus", l.n_minus},
                             {"re", rounded(amp.real())},
                             {"im", rounded(amp.imag())}});
  }
  os << j.dump(2) << '\n';
}

}  // namespace cqedgate::io

#endif  // CQEDGATE_TOOLS_OUTPUT_HPP
