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

#ifndef CQEDGATE_TOOLS_CLI_HPP
#define CQEDGATE_TOOLS_CLI_HPP

// Command-line front end. run() is separate from main() so tests can drive it
// in-process.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqedgate/cqedgate.hpp"
#include "output.hpp"

namespace cqedgate::cli {

/// Relative output paths are resolved against this directory when set.
inline constexpr const char* kOutputDirEnv = "CQEDGATE_OUTPUT_DIR";

/// Parsed --input-state argument.
struct InputStateSpec {
  bool coherent = false;
  BasisLabel label{AtomLevel::c, 0, 0};
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
};

/// Accepts "c01" (single-digit photon numbers), "a,2,3", or
/// "coherent:<alpha+>,<alpha->" with real amplitudes.
inline InputStateSpec parse_input_state(const std::string& text) {
  InputStateSpec spec;
  const std::string coherent_prefix = "coherent:";
  auto bad = [&] { return InvalidArgument("bad --input-state '" + text + "'"); };
  if (text.rfind(coherent_prefix, 0) == 0) {
    spec.coherent = true;
    std::istringstream in(text.substr(coherent_prefix.size()));
    char comma = 0;
    if (!(in >> spec.alpha_plus >> comma >> spec.alpha_minus) || comma != ',' || !in.eof()) {
      throw bad();
    }
    return spec;
  }
  if (text.empty()) throw bad();
  switch (text[0]) {
    case 'a': spec.label.atom = AtomLevel::a; break;
    case 'b': spec.label.atom = AtomLevel::b; break;
    case 'c': spec.label.atom = AtomLevel::c; break;
    default: throw bad();
  }
  const std::string rest = text.substr(1);
  if (rest.size() == 2 && std::isdigit(static_cast<unsigned char>(rest[0])) &&
      std::isdigit(static_cast<unsigned char>(rest[1]))) {
    spec.label.n_plus = rest[0] - '0';
    spec.label.n_minus = rest[1] - '0';
    return spec;
  }
  std::istringstream in(rest);
  char c1 = 0, c2 = 0;
  if (!(in >> c1 >> spec.label.n_plus >> c2 >> spec.label.n_minus) || c1 != ',' || c2 != ',' ||
      !in.eof() || spec.label.n_plus < 0 || spec.label.n_minus < 0) {
    throw bad();
  }
  return spec;
}

namespace detail {

enum class Format { csv, json };

struct Common {
  std::string output;
  std::string format;
};

inline Format resolve_format(const std::string& flag, Format fallback) {
  if (flag.empty()) return fallback;
  if (flag == "csv") return Format::csv;
  if (flag == "json") return Format::json;
  throw InvalidArgument("unknown --format '" + flag + "'");
}

/// Sends `write` to the requested file, or to `out` when no path was given.
inline void emit(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::filesystem::path target(path);
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir && target.is_relative()) {
    target = std::filesystem::path(dir) / target;
  }
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream file(target, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + target.string());
  write(file);
  if (!file) throw std::runtime_error("failed writing " + target.string());
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cavity-QED two-photon phase gates: timing search, fidelity and entanglement maps",
               "cqedgate"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Output file (default: standard output)");
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // search
  std::string search_gate = "both";
  int search_max_n = kDefaultMaxN;
  double search_eps = kDefaultEpsilonMax;
  std::optional<double> search_gt_max;
  auto* search = app.add_subcommand("search", "Integer gate-timing solutions sorted by gt");
  search->add_option("--gate", search_gate, "u1, u2 or both")
      ->check(CLI::IsMember({"u1", "u2", "both"}))
      ->capture_default_str();
  search->add_option("--max-n", search_max_n, "Largest n enumerated")->capture_default_str();
  search->add_option("--eps", search_eps, "Largest accepted residual")->capture_default_str();
  search->add_option("--gt-max", search_gt_max, "Drop solutions slower than this gt");
  add_common(search);

  // trace
  std::string trace_gate = "u1";
  double trace_delta = 0.0;
  double trace_gt_max = 100.0;
  int trace_samples = 2000;
  std::string trace_engine = "numeric";
  auto* trace = app.add_subcommand("trace", "Gate fidelity versus interaction time gt");
  trace->add_option("--gate", trace_gate, "u1 or u2")
      ->check(CLI::IsMember({"u1", "u2"}))
      ->capture_default_str();
  trace->add_option("--delta-over-g", trace_delta, "Detuning in units of g")->capture_default_str();
  trace->add_option("--gt-max", trace_gt_max, "End of the gt axis")->capture_default_str();
  trace->add_option("--samples", trace_samples, "Number of gt samples")->capture_default_str();
  trace->add_option("--engine", trace_engine, "analytic or numeric")
      ->check(CLI::IsMember({"analytic", "numeric"}))
      ->capture_default_str();
  add_common(trace);

  // map-vb
  int vb_row = 1;
  std::optional<double> vb_v_min, vb_v_max;
  double vb_b_min = -1.0, vb_b_max = 1.0;
  int vb_samples = 101;
  unsigned vb_threads = 0;
  auto* map_vb = app.add_subcommand(
      "map-vb", "Fidelity over atomic velocity and stray field, microwave preset");
  map_vb->add_option("--row", vb_row, "1-based row of the default solution table")
      ->capture_default_str();
  map_vb->add_option("--v-min", vb_v_min, "Lowest velocity in m/s (default 0.99 v0)");
  map_vb->add_option("--v-max", vb_v_max, "Highest velocity in m/s (default 1.01 v0)");
  map_vb->add_option("--b-min", vb_b_min, "Lowest field in mG")->capture_default_str();
  map_vb->add_option("--b-max", vb_b_max, "Highest field in mG")->capture_default_str();
  map_vb->add_option("--samples", vb_samples, "Samples per axis")->capture_default_str();
  map_vb->add_option("--threads", vb_threads, "Worker threads (0 = all cores)");
  add_common(map_vb);

  // map-concurrence
  int cc_row = 1;
  int cc_n_max = 8;
  double cc_mean_max = 0.9;
  int cc_samples = 10;
  unsigned cc_threads = 0;
  auto* map_cc = app.add_subcommand(
      "map-concurrence", "Concurrence over the mean photon numbers of coherent inputs");
  map_cc->add_option("--row", cc_row, "1-based row of the default solution table")
      ->capture_default_str();
  map_cc->add_option("--n-max", cc_n_max, "Photon cutoff per polarization")->capture_default_str();
  map_cc->add_option("--mean-max", cc_mean_max, "Largest mean photon number")
      ->capture_default_str();
  map_cc->add_option("--samples", cc_samples, "Samples per axis")->capture_default_str();
  map_cc->add_option("--threads", cc_threads, "Worker threads (0 = all cores)");
  add_common(map_cc);

  // evolve
  std::string ev_state;
  double ev_g = 1.0, ev_delta_plus = 0.0, ev_delta_minus = 0.0, ev_t = 0.0;
  std::optional<int> ev_n_max;
  std::optional<double> ev_dt;
  auto* evolve_cmd = app.add_subcommand("evolve", "Final amplitudes for one initial state");
  evolve_cmd->add_option("--input-state", ev_state, "c00, a,2,3 or coherent:<a+>,<a->")
      ->required();
  evolve_cmd->add_option("--g", ev_g, "Coupling")->capture_default_str();
  evolve_cmd->add_option("--delta-plus", ev_delta_plus, "sigma+ detuning")->capture_default_str();
  evolve_cmd->add_option("--delta-minus", ev_delta_minus, "sigma- detuning")
      ->capture_default_str();
  evolve_cmd->add_option("--t", ev_t, "Interaction time")->required();
  evolve_cmd->add_option("--n-max", ev_n_max, "Photon cutoff (default: smallest that fits)");
  evolve_cmd->add_option("--dt", ev_dt, "Integrator step (default: automatic)");
  add_common(evolve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*search) {
      const double gt_max = search_gt_max.value_or(std::numeric_limits<double>::infinity());
      const auto table =
          search_gate == "both"
              ? search_all_gates(search_max_n, search_eps, gt_max)
              : search_solutions(parse_gate(search_gate), search_max_n, search_eps, gt_max);
      const auto fmt = detail::resolve_format(common.format, detail::Format::json);
      detail::emit(common.output, out, [&](std::ostream& os) {
        fmt == detail::Format::json ? io::write_solutions_json(os, table)
                                    : io::write_solutions_csv(os, table);
      });
    } else if (*trace) {
      const auto params = ModelParams::resonant(1.0, trace_delta);
      const auto grid = fidelity_trace(params, parse_gate(trace_gate), trace_gt_max, trace_samples,
                                       parse_engine(trace_engine));
      const auto fmt = detail::resolve_format(common.format, detail::Format::csv);
      detail::emit(common.output, out, [&](std::ostream& os) {
        fmt == detail::Format::csv ? io::write_grid_csv(os, grid) : io::write_grid_json(os, grid);
      });
    } else if (*map_vb) {
      const auto setup = PhysicalSetup::microwave();
      const auto solution = default_table_row(vb_row);
      const double v0 = setup.velocity_for(solution);
      const Axis velocity("velocity", "m/s", vb_v_min.value_or(0.99 * v0),
                          vb_v_max.value_or(1.01 * v0), vb_samples);
      const Axis field("bfield", "T", vb_b_min * kTeslaPerMilliGauss,
                       vb_b_max * kTeslaPerMilliGauss, vb_samples);
      auto grid = velocity_bfield_map(setup, solution, velocity, field, {}, vb_threads);
      grid.y_axis = Axis("bfield", "mG", vb_b_min, vb_b_max, vb_samples);
      const auto fmt = detail::resolve_format(common.format, detail::Format::csv);
      detail::emit(common.output, out, [&](std::ostream& os) {
        fmt == detail::Format::csv ? io::write_grid_csv(os, grid) : io::write_grid_json(os, grid);
      });
    } else if (*map_cc) {
      const auto solution = default_table_row(cc_row);
      const Axis mean("mean_photons", "photons", 0.0, cc_mean_max, cc_samples);
      const auto grid = concurrence_map(solution, mean, cc_n_max, 1.0, {}, cc_threads);
      const auto fmt = detail::resolve_format(common.format, detail::Format::csv);
      detail::emit(common.output, out, [&](std::ostream& os) {
        fmt == detail::Format::csv ? io::write_grid_csv(os, grid) : io::write_grid_json(os, grid);
      });
    } else if (*evolve_cmd) {
      const InputStateSpec spec = parse_input_state(ev_state);
      const ModelParams params = ModelParams{ev_g, ev_delta_plus, ev_delta_minus}.validated();
      int n_max = 1;
      if (spec.coherent) {
        n_max = std::max(required_cutoff(spec.alpha_plus * spec.alpha_plus),
                         required_cutoff(spec.alpha_minus * spec.alpha_minus));
      } else {
        n_max = std::max({1, spec.label.n_plus, spec.label.n_minus});
      }
      const SystemBasis basis(ev_n_max.value_or(n_max));
      const StateVector psi0 =
          spec.coherent ? coherent_product_state(spec.alpha_plus, spec.alpha_minus, basis)
                        : basis_state(basis, spec.label.atom, spec.label.n_plus,
                                      spec.label.n_minus);
      IntegratorConfig cfg;
      cfg.dt = ev_dt;
      const StateVector psi = evolve(psi0, params, ev_t, cfg);
      std::ostringstream comment;
      comment << "input " << ev_state << ", g=" << io::format_number(ev_g)
              << ", delta_plus=" << io::format_number(ev_delta_plus)
              << ", delta_minus=" << io::format_number(ev_delta_minus)
              << ", t=" << io::format_number(ev_t) << ", n_max=" << basis.n_max();
      const auto fmt = detail::resolve_format(common.format, detail::Format::csv);
      detail::emit(common.output, out, [&](std::ostream& os) {
        fmt == detail::Format::csv ? io::write_state_csv(os, psi, comment.str())
                                   : io::write_state_json(os, psi);
      });
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << "\n";
    return 1;
  } catch (const IntegrationFailure& e) {
    err << "integration failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

/// Convenience overload; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("cqedgate");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cqedgate::cli

#endif  // CQEDGATE_TOOLS_CLI_HPP
