// Copyright 2026 The qace authors
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

// Command-line front end. Subcommands map the toolkit's experiments to
// reproducible CSV/JSON reports:
//
//   table1          gate-scenario values for the named two-qubit gates
//   mbqc-sweep      one-way-model curve for a state family, numeric vs closed form
//   teleport-sweep  teleportation curve for a state family
//   scatter         sampled states: concurrence vs ace
//   gate-ace        value for a user-supplied gate (JSON matrix file)
//   classical       observational/interventional report for a classical model
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 usage error,
// 3 validation error, 4 numerical-convergence failure.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qace/ace.hpp"
#include "qace/causal.hpp"
#include "qace/sampling.hpp"
#include "qace/states.hpp"

namespace {

using qace::AceEstimate;
using qace::AveragingConfig;
using qace::AveragingMethod;
using qace::PairMode;

struct OutputOptions {
  std::string path;    // empty = stdout
  std::string format;  // "csv" or "json"
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_report(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open output file: " + out.path);
  f << text;
  if (!f) throw std::ios_base::failure("failed writing output file: " + out.path);
}

void add_averaging_flags(CLI::App* cmd, AveragingConfig* cfg, std::string* method,
                         std::string* pair_mode) {
  cmd->add_option("--method", *method, "Averaging method")
      ->check(CLI::IsMember({"quadrature", "mc"}))
      ->capture_default_str();
  cmd->add_option("--phi-nodes", cfg->phi_nodes, "Azimuthal quadrature nodes")
      ->capture_default_str();
  cmd->add_option("--theta-nodes", cfg->theta_nodes, "Polar quadrature nodes (even)")
      ->capture_default_str();
  cmd->add_option("--mc-samples", cfg->mc_samples, "Monte Carlo sample count")
      ->capture_default_str();
  cmd->add_option("--seed", cfg->seed, "Random seed")->capture_default_str();
  cmd->add_option("--pair-mode", *pair_mode, "Intervention pair mode")
      ->check(CLI::IsMember({"antipodal", "independent"}))
      ->capture_default_str();
}

void resolve_averaging(AveragingConfig* cfg, const std::string& method,
                       const std::string& pair_mode) {
  cfg->method =
      method == "mc" ? AveragingMethod::kMonteCarlo : AveragingMethod::kQuadrature;
  cfg->pair_mode =
      pair_mode == "independent" ? PairMode::kIndependent : PairMode::kAntipodal;
  cfg->validate();
}

std::string method_name(AveragingMethod m) {
  return m == AveragingMethod::kQuadrature ? "quadrature" : "mc";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> eps_grid(int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
  return grid;
}

// --- subcommand bodies -------------------------------------------------------

int run_table1(const AveragingConfig& cfg, const OutputOptions& out) {
  std::vector<qace::GateSpec> gates;
  {
    qace::SeededRng rng(cfg.seed);
    gates.push_back(qace::random_local_gate(rng));
  }
  gates.push_back(qace::standard_gate(qace::StandardGate::kCnot));
  gates.push_back(qace::standard_gate(qace::StandardGate::kCz));
  gates.push_back(qace::standard_gate(qace::StandardGate::kB));
  gates.push_back(qace::standard_gate(qace::StandardGate::kSqrtSwap));
  gates.push_back(qace::standard_gate(qace::StandardGate::kSwap));

  struct Row {
    std::string name;
    AceEstimate est;
  };
  std::vector<Row> rows;
  for (const auto& g : gates) rows.push_back({g.name, qace::ace_gate(g, cfg)});

  std::ostringstream s;
  if (out.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Row& r : rows)
      arr.push_back({{"name", r.name},
                     {"ace_value", r.est.value},
                     {"error_estimate", r.est.error_estimate},
                     {"method", method_name(r.est.method)}});
    s << arr.dump(2) << "\n";
  } else {
    s << "name,ace_value,error_estimate,method\n";
    for (const Row& r : rows)
      s << r.name << ',' << fmt12(r.est.value) << ',' << fmt12(r.est.error_estimate) << ','
        << method_name(r.est.method) << "\n";
  }
  write_report(out, s.str());
  return 0;
}

int run_mbqc_sweep(const std::string& family, int grid_points, const AveragingConfig& cfg,
                   const OutputOptions& out) {
  const qace::StateFamily f = qace::parse_family(family);
  std::ostringstream s;
  s << "epsilon,concurrence,ace_numeric,ace_closed_form,abs_diff\n";
  for (double eps : eps_grid(grid_points)) {
    const qace::DensityOp rho = qace::family_state(f, eps);
    const double conc = qace::concurrence(rho);
    const double numeric = qace::ace_mbqc(rho, cfg).value;
    const double closed = qace::closed_form_mbqc(f, eps);
    s << fmt12(eps) << ',' << fmt12(conc) << ',' << fmt12(numeric) << ',' << fmt12(closed)
      << ',' << fmt12(std::abs(numeric - closed)) << "\n";
  }
  write_report(out, s.str());
  return 0;
}

int run_teleport_sweep(const std::string& family, int grid_points,
                       const AveragingConfig& cfg, const OutputOptions& out) {
  const qace::StateFamily f = qace::parse_family(family);
  std::ostringstream s;
  s << "epsilon,concurrence,ace_numeric\n";
  for (double eps : eps_grid(grid_points)) {
    const qace::DensityOp rho = qace::family_state(f, eps);
    const double conc = qace::concurrence(rho);
    const double numeric = qace::ace_teleport(rho, cfg).value;
    s << fmt12(eps) << ',' << fmt12(conc) << ',' << fmt12(numeric) << "\n";
  }
  write_report(out, s.str());
  return 0;
}

int run_scatter(const std::string& scenario, int n, const AveragingConfig& cfg,
                const OutputOptions& out) {
  const bool mbqc = scenario == "mbqc";
  // Independent sub-streams per state kind keep the draws stable even if one
  // list grows or shrinks.
  const qace::SeededRng base(cfg.seed);

  struct Item {
    qace::DensityOp state;
    std::string kind;
  };
  std::vector<Item> items;
  {
    qace::SeededRng rng = base.split(0);
    for (int i = 0; i < n; ++i) {
      const qace::Ket k = qace::haar_pure_two_qubit(rng);
      items.push_back({qace::DensityOp(k.projector()), "pure"});
    }
  }
  if (!mbqc) {
    qace::SeededRng rng = base.split(1);
    for (int i = 0; i < n; ++i)
      items.push_back({qace::ginibre_mixed_two_qubit(rng), "mixed"});
  }
  {
    qace::SeededRng rng = base.split(2);
    for (int i = 0; i < n; ++i)
      items.push_back({qace::random_product_state(rng), "product"});
  }

  std::ostringstream s;
  s << "index,concurrence,ace_value,state_kind\n";
  for (size_t i = 0; i < items.size(); ++i) {
    const double conc = qace::concurrence(items[i].state);
    const double value = mbqc ? qace::ace_mbqc(items[i].state, cfg).value
                              : qace::ace_teleport(items[i].state, cfg).value;
    s << i << ',' << fmt12(conc) << ',' << fmt12(value) << ',' << items[i].kind << "\n";
  }
  write_report(out, s.str());
  return 0;
}

int run_gate_ace(const std::string& path, const AveragingConfig& cfg,
                 const OutputOptions& out) {
  const qace::GateSpec gate = qace::load_gate_spec(read_file(path));
  const AceEstimate est = qace::ace_gate(gate, cfg);
  nlohmann::json doc{{"name", gate.name},
                     {"ace_value", est.value},
                     {"error_estimate", est.error_estimate}};
  write_report(out, doc.dump(2) + "\n");
  return 0;
}

int run_classical(const std::string& path, int a0, int a1, const OutputOptions& out) {
  const qace::ClassicalCausalModel model = qace::load_causal_model(read_file(path));
  const qace::FiniteDistribution obs0 = qace::observational(model, a0);
  const qace::FiniteDistribution obs1 = qace::observational(model, a1);
  const qace::FiniteDistribution do0 = qace::interventional(model, a0);
  const qace::FiniteDistribution do1 = qace::interventional(model, a1);

  nlohmann::json doc;
  doc["a0"] = a0;
  doc["a1"] = a1;
  doc["observational"] = {{"a0", obs0.probabilities()}, {"a1", obs1.probabilities()}};
  doc["interventional"] = {{"a0", do0.probabilities()}, {"a1", do1.probabilities()}};
  if (model.card_b == 2) doc["ace_binary"] = qace::ace_binary(do1, do0);
  doc["ace_max"] = qace::ace_max(do1, do0);
  doc["ace_tvd"] = qace::ace_tvd(do1, do0);
  write_report(out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum average-causal-effect toolkit"};
  app.require_subcommand(1);

  AveragingConfig cfg;
  std::string method = "quadrature";
  std::string pair_mode = "antipodal";
  std::string family;
  std::string scenario;
  std::string gate_file;
  std::string model_file;
  int grid_points = 51;
  int scatter_n = 1000;
  int a0 = 0, a1 = 1;

  // One output-option block per subcommand so the format defaults stay
  // independent.
  std::array<OutputOptions, 6> outputs;
  int out_index = 0;
  auto add_output_flags = [&outputs, &out_index](CLI::App* cmd, const char* default_format,
                                                 bool allow_choice) -> OutputOptions* {
    OutputOptions* out = &outputs[out_index++];
    out->format = default_format;
    cmd->add_option("--out", out->path, "Output file (default: stdout)");
    auto* opt = cmd->add_option("--format", out->format, "Output format")
                    ->capture_default_str();
    if (allow_choice)
      opt->check(CLI::IsMember({"csv", "json"}));
    else
      opt->check(CLI::IsMember({std::string(default_format)}));
    return out;
  };

  CLI::App* table1 = app.add_subcommand("table1", "Gate-scenario values for named gates");
  add_averaging_flags(table1, &cfg, &method, &pair_mode);
  OutputOptions* table1_out = add_output_flags(table1, "csv", true);

  CLI::App* mbqc = app.add_subcommand("mbqc-sweep", "One-way-model family sweep");
  mbqc->add_option("--family", family, "State family (F,G,H,ISO,C,CPRIME,CDPRIME)")
      ->required()
      ->transform(CLI::IsMember({"F", "G", "H", "ISO", "C", "CPRIME", "CDPRIME"},
                                CLI::ignore_case));
  mbqc->add_option("--eps-grid", grid_points, "Grid points in [0,1]")->capture_default_str();
  add_averaging_flags(mbqc, &cfg, &method, &pair_mode);
  OutputOptions* mbqc_out = add_output_flags(mbqc, "csv", false);

  CLI::App* tele = app.add_subcommand("teleport-sweep", "Teleportation family sweep");
  tele->add_option("--family", family, "State family (F,G,H,ISO,C,CPRIME,CDPRIME)")
      ->required()
      ->transform(CLI::IsMember({"F", "G", "H", "ISO", "C", "CPRIME", "CDPRIME"},
                                CLI::ignore_case));
  tele->add_option("--eps-grid", grid_points, "Grid points in [0,1]")->capture_default_str();
  add_averaging_flags(tele, &cfg, &method, &pair_mode);
  OutputOptions* tele_out = add_output_flags(tele, "csv", false);

  CLI::App* scatter = app.add_subcommand("scatter", "Concurrence vs ace for sampled states");
  scatter->add_option("--scenario", scenario, "mbqc or teleport")
      ->required()
      ->check(CLI::IsMember({"mbqc", "teleport"}));
  scatter->add_option("--n", scatter_n, "Samples per state kind")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_averaging_flags(scatter, &cfg, &method, &pair_mode);
  OutputOptions* scatter_out = add_output_flags(scatter, "csv", false);

  CLI::App* gate_ace = app.add_subcommand("gate-ace", "Value for a gate from a JSON file");
  gate_ace->add_option("--file", gate_file, "Gate definition file")->required();
  add_averaging_flags(gate_ace, &cfg, &method, &pair_mode);
  OutputOptions* gate_ace_out = add_output_flags(gate_ace, "json", false);

  CLI::App* classical = app.add_subcommand("classical", "Classical causal-model report");
  classical->add_option("--model", model_file, "Model definition file")->required();
  classical->add_option("--a0", a0, "First intervention value")->capture_default_str();
  classical->add_option("--a1", a1, "Second intervention value")->capture_default_str();
  OutputOptions* classical_out = add_output_flags(classical, "json", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(table1)) {
      resolve_averaging(&cfg, method, pair_mode);
      return run_table1(cfg, *table1_out);
    }
    if (app.got_subcommand(mbqc)) {
      resolve_averaging(&cfg, method, pair_mode);
      return run_mbqc_sweep(family, grid_points, cfg, *mbqc_out);
    }
    if (app.got_subcommand(tele)) {
      resolve_averaging(&cfg, method, pair_mode);
      return run_teleport_sweep(family, grid_points, cfg, *tele_out);
    }
    if (app.got_subcommand(scatter)) {
      resolve_averaging(&cfg, method, pair_mode);
      return run_scatter(scenario, scatter_n, cfg, *scatter_out);
    }
    if (app.got_subcommand(gate_ace)) {
      resolve_averaging(&cfg, method, pair_mode);
      return run_gate_ace(gate_file, cfg, *gate_ace_out);
    }
    if (app.got_subcommand(classical)) {
      return run_classical(model_file, a0, a1, *classical_out);
    }
  } catch (const qace::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 4;
  } catch (const qace::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
