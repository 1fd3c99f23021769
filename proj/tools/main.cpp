// Copyright 2026 The qlandscape Authors
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

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlandscape/clifford.hpp"
#include "qlandscape/experiments.hpp"
#include "qlandscape/io.hpp"
#include "qlandscape/qaoa.hpp"
#include "qlandscape/rng.hpp"
#include "qlandscape/threads.hpp"

namespace {

using namespace qlandscape;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

FrequencyLattice pick_lattice(const QaoaInstance& instance, const std::string& kind) {
  if (kind == "global") return qaoa_lattice(instance);
  if (kind == "lightcone") return qaoa_lightcone_lattice(instance);
  throw std::invalid_argument("lattice must be 'global' or 'lightcone'");
}

BpdnConfig config_from_flags(double alpha, double lambda, double lambda_scale, int fista_iters,
                             int gd_iters, double support_threshold) {
  BpdnConfig config;
  config.alpha_fista = alpha;
  config.lambda = lambda;
  config.lambda_scale = lambda_scale;
  config.n_fista = fista_iters;
  config.n_gd = gd_iters;
  config.support_threshold = support_threshold;
  config.validate();
  return config;
}

int cmd_graph(int n, int degree, std::uint64_t seed, const std::string& out) {
  const Graph graph = random_regular_graph(n, degree, seed);
  write_json_file(out, graph_to_json(graph));
  std::cout << "graph: n=" << n << " degree=" << degree << " edges=" << graph.num_edges()
            << " -> " << out << "\n";
  return 0;
}

int cmd_sample(const std::string& graph_path, int p, const std::string& lattice_kind,
               const std::string& mode, std::size_t m, int shots, std::uint64_t seed,
               const std::string& out, std::size_t budget) {
  const QaoaInstance instance{graph_from_json(read_json_file(graph_path)), p};
  const FrequencyLattice lattice = pick_lattice(instance, lattice_kind);
  const std::optional<int> n_shots = shots > 0 ? std::optional<int>(shots) : std::nullopt;
  const CostOracle oracle =
      n_shots ? shot_oracle(instance, *n_shots, seed) : exact_oracle(instance);

  Json meta;
  meta["n"] = instance.graph.num_vertices;
  meta["p"] = instance.layers;

  if (mode == "grid") {
    const GridData data = sample_full_grid(oracle, NyquistGrid(lattice), budget);
    std::vector<std::size_t> idx(data.values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const SampleSet samples(lattice, idx, data.values, n_shots);
    Json j = sample_set_to_json(samples, true);
    j["qaoa"] = meta;
    write_json_file(out, j);
    std::cout << "sampled full grid: n=" << data.values.size() << " -> " << out << "\n";
    return 0;
  }
  if (mode != "random") throw std::invalid_argument("mode must be 'grid' or 'random'");
  if (m == 0) throw std::invalid_argument("random mode needs --m");
  const std::vector<std::size_t> idx = random_sample_grid(lattice, m, seed);
  const NyquistGrid grid(lattice);
  std::vector<double> values(idx.size());
  parallel_for(0, idx.size(), [&](std::size_t i) { values[i] = oracle(grid.point_at(idx[i])); });
  const SampleSet samples(lattice, idx, values, n_shots);
  Json j = sample_set_to_json(samples, false);
  j["qaoa"] = meta;
  write_json_file(out, j);
  std::cout << "sampled " << m << " random grid points -> " << out << "\n";
  return 0;
}

int cmd_recover(const std::string& samples_path, const std::string& out,
                const std::string& diagnostics_path, const std::string& csv_path,
                std::size_t holdout, double accept_ratio, const BpdnConfig& config,
                std::uint64_t seed) {
  const Json sample_json = read_json_file(samples_path);
  const SampleSet samples = sample_set_from_json(sample_json);
  const RecoveryResult result = recover_from_samples(samples, holdout, accept_ratio, seed, config);
  write_json_file(out, trigpoly_to_json(result.poly));
  if (!diagnostics_path.empty()) {
    write_json_file(diagnostics_path, recovery_diagnostics_to_json(result, config, seed));
  }
  if (!csv_path.empty()) {
    int n_qubits = 0, layers = 0;
    if (sample_json.contains("qaoa")) {
      n_qubits = sample_json["qaoa"].value("n", 0);
      layers = sample_json["qaoa"].value("p", 0);
    }
    write_text_file(csv_path, recovery_row_csv(n_qubits, layers, result, seed));
  }
  std::cout << "recover: m=" << result.m_used << " s=" << result.support_size
            << " oos_mse_rel=" << fmt(result.oos_mse_rel)
            << (result.accepted ? " (accepted)" : " (not accepted)") << " -> " << out << "\n";
  return 0;
}

int cmd_sparsity(const std::string& n_list, const std::string& p_list, int graphs,
                 std::uint64_t seed, double threshold, std::size_t budget,
                 const std::string& out) {
  auto parse_list = [](const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
  };
  const auto rows = sparsity_scaling_experiment(parse_list(n_list), parse_list(p_list), graphs,
                                                seed, threshold, budget);
  write_text_file(out, sparsity_rows_to_csv(rows));
  std::cout << "sparsity: " << rows.size() << " rows -> " << out << "\n";
  return 0;
}

int cmd_evaluate(const std::string& poly_path, const std::string& graph_path, int p,
                 std::size_t points, std::uint64_t seed, const std::string& out) {
  const TrigPoly poly = trigpoly_from_json(read_json_file(poly_path));
  const QaoaInstance instance{graph_from_json(read_json_file(graph_path)), p};
  if (poly.lattice().dims() != instance.dims()) {
    throw std::invalid_argument("polynomial dimension does not match the instance");
  }
  const CostOracle oracle = exact_oracle(instance);
  const NyquistGrid grid(poly.lattice());
  const std::vector<std::size_t> idx = random_sample_grid(poly.lattice(), points, seed);
  std::vector<std::vector<double>> test_points;
  test_points.reserve(idx.size());
  for (std::size_t i : idx) test_points.push_back(grid.point_at(i));
  const auto [mse_rel, baseline_rel] = oos_relative_mse(poly, oracle, test_points);

  Json j;
  j["n_points"] = points;
  j["mse_rel"] = mse_rel;
  j["baseline_mse_rel"] = baseline_rel;
  j["s"] = poly.full_support_size();
  j["seed"] = seed;
  if (!out.empty()) write_json_file(out, j);
  std::cout << "evaluate: mse_rel=" << fmt(mse_rel) << " baseline=" << fmt(baseline_rel) << "\n";
  return 0;
}

int cmd_optimize(const std::string& graph_path, int p, const std::string& mode,
                 const std::string& poly_path, int restarts, const GdParams& params,
                 const std::string& lattice_kind, std::uint64_t seed, const std::string& out) {
  const QaoaInstance instance{graph_from_json(read_json_file(graph_path)), p};
  const QaoaSimulator sim(instance);
  const CostOracle oracle = [&sim](std::span<const double> t) { return sim.expectation(t); };
  const FrequencyLattice scan_lattice = pick_lattice(instance, lattice_kind);
  GdParams polish = params;
  const double c_min = reference_minimum(instance, scan_lattice, polish);

  std::ostringstream csv;
  csv << "mode,restart,rel_error,quantum_calls\n";
  const int d = instance.dims();

  auto random_start = [&](int restart) {
    std::mt19937_64 rng = make_engine(seed, static_cast<std::uint64_t>(restart) + 1);
    std::vector<double> theta(static_cast<std::size_t>(d));
    for (double& t : theta) t = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
    return theta;
  };

  if (mode == "true") {
    for (int r = 0; r < restarts; ++r) {
      const OptRun run = gd_optimize(oracle, random_start(r), params);
      csv << "true," << r << ',' << fmt(relative_error_to_optimum(run.final_cost, c_min)) << ','
          << run.quantum_calls << "\n";
    }
  } else if (mode == "recovered") {
    if (poly_path.empty()) throw std::invalid_argument("recovered mode needs --poly");
    const TrigPoly poly = trigpoly_from_json(read_json_file(poly_path));
    if (poly.lattice().dims() != d) {
      throw std::invalid_argument("polynomial dimension does not match the instance");
    }
    OptRun best_run = gd_optimize(poly, random_start(0), params);
    double best_true = oracle(best_run.theta_star);
    csv << "recovered,0," << fmt(relative_error_to_optimum(best_true, c_min)) << ",0\n";
    for (int r = 1; r < restarts; ++r) {
      const OptRun run = gd_optimize(poly, random_start(r), params);
      const double true_value = oracle(run.theta_star);
      csv << "recovered," << r << ',' << fmt(relative_error_to_optimum(true_value, c_min))
          << ",0\n";
      if (run.final_cost < best_run.final_cost) {
        best_run = run;
        best_true = true_value;
      }
    }
    const OptRun refined = gd_optimize(oracle, best_run.theta_star, params);
    csv << "refined,0," << fmt(relative_error_to_optimum(refined.final_cost, c_min)) << ','
        << refined.quantum_calls << "\n";
  } else {
    throw std::invalid_argument("mode must be 'true' or 'recovered'");
  }
  write_text_file(out, csv.str());
  std::cout << "optimize: reference minimum " << fmt(c_min) << " -> " << out << "\n";
  return 0;
}

int cmd_gorge(const std::string& samples_path, std::size_t m, std::uint64_t seed, int shots,
              const std::string& out) {
  const SampleSet samples = sample_set_from_json(read_json_file(samples_path));
  if (samples.size() != samples.lattice().size()) {
    throw std::invalid_argument("gorge needs a full-grid sample set");
  }
  const NyquistGrid grid(samples.lattice());
  const GridData full{grid, samples.values()};
  const std::vector<std::size_t> omega = random_sample_grid(samples.lattice(), m, seed);
  const std::optional<int> n_shots = shots > 0 ? std::optional<int>(shots) : std::nullopt;
  const GorgeReport report = gorge_report(full, omega, n_shots);
  write_json_file(out, gorge_report_to_json(report));
  std::cout << "gorge: ratio=" << fmt(report.ratio) << " bound=" << fmt(report.bound)
            << (report.condition_met ? " (unrecoverable)" : " (no obstruction)") << " -> " << out
            << "\n";
  return 0;
}

int cmd_clifford(const std::string& circuit_path, const std::string& observable_path,
                 const std::string& input_bits, const std::string& out) {
  const GenericCircuit circuit = circuit_from_json(read_json_file(circuit_path));
  const Observable observable = observable_from_json(read_json_file(observable_path));
  std::uint64_t input = 0;
  for (std::size_t q = 0; q < input_bits.size(); ++q) {
    if (input_bits[q] == '1') {
      input |= 1ULL << q;
    } else if (input_bits[q] != '0') {
      throw std::invalid_argument("input must be a bitstring (qubit 0 first)");
    }
  }
  if (static_cast<int>(input_bits.size()) != circuit.num_qubits) {
    throw std::invalid_argument("input bitstring length must equal the qubit count");
  }
  const TrigPoly poly = closed_form_cost(circuit, observable, input);
  write_json_file(out, trigpoly_to_json(poly));
  std::cout << "clifford: closed form with s=" << poly.full_support_size() << " -> " << out
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse recovery of variational quantum cost landscapes"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  // graph
  auto* graph = app.add_subcommand("graph", "generate a random regular graph");
  int g_n = 8, g_degree = 3;
  std::uint64_t g_seed = 0;
  std::string g_out;
  graph->add_option("--n", g_n, "vertex count")->required();
  graph->add_option("--degree", g_degree, "vertex degree")->required();
  graph->add_option("--seed", g_seed, "RNG seed")->required();
  graph->add_option("--out", g_out, "output graph JSON")->required();

  // sample
  auto* sample = app.add_subcommand("sample", "sample a QAOA landscape on the Nyquist grid");
  std::string s_graph, s_mode = "random", s_lattice = "global", s_out;
  int s_p = 1, s_shots = 0;
  std::size_t s_m = 0, s_budget = kDefaultGridBudget;
  std::uint64_t s_seed = 0;
  sample->add_option("--graph", s_graph, "graph JSON")->required();
  sample->add_option("--p", s_p, "QAOA layers")->required();
  sample->add_option("--mode", s_mode, "grid | random");
  sample->add_option("--lattice", s_lattice, "global | lightcone");
  sample->add_option("--m", s_m, "sample count (random mode)");
  sample->add_option("--shots", s_shots, "shots per sample (0 = exact)");
  sample->add_option("--budget", s_budget, "full-grid budget");
  sample->add_option("--seed", s_seed, "RNG seed")->required();
  sample->add_option("--out", s_out, "output sample-set JSON")->required();

  // recover
  auto* rec = app.add_subcommand("recover", "BPDN recovery from a sample set");
  std::string r_samples, r_out, r_diag, r_csv;
  std::size_t r_holdout = 100;
  const BpdnConfig bpdn_defaults;
  double r_accept = 0.1;
  double r_alpha = bpdn_defaults.alpha_fista;
  double r_lambda = bpdn_defaults.lambda;
  double r_lambda_scale = bpdn_defaults.lambda_scale;
  double r_support_threshold = bpdn_defaults.support_threshold;
  int r_fista = bpdn_defaults.n_fista;
  int r_gd = bpdn_defaults.n_gd;
  std::uint64_t r_seed = 0;
  rec->add_option("--samples", r_samples, "sample-set JSON")->required();
  rec->add_option("--out", r_out, "output polynomial JSON")->required();
  rec->add_option("--diagnostics", r_diag, "output diagnostics JSON");
  rec->add_option("--csv", r_csv, "append-style recovery CSV row");
  rec->add_option("--holdout", r_holdout, "holdout size");
  rec->add_option("--accept-ratio", r_accept, "acceptance ratio vs zero predictor");
  rec->add_option("--alpha", r_alpha, "FISTA step fraction");
  rec->add_option("--lambda", r_lambda, "L1 weight (-1 = heuristic)");
  rec->add_option("--lambda-scale", r_lambda_scale, "scale on the heuristic lambda");
  rec->add_option("--fista-iters", r_fista, "FISTA iterations");
  rec->add_option("--gd-iters", r_gd, "refinement iterations");
  rec->add_option("--support-threshold", r_support_threshold, "relative support cutoff");
  rec->add_option("--seed", r_seed, "RNG seed")->required();

  // sparsity
  auto* sp = app.add_subcommand("sparsity", "full-grid sparsity scaling experiment");
  std::string sp_n = "6,8,10", sp_p = "1", sp_out;
  int sp_graphs = 5;
  double sp_threshold = 1e-8;
  std::size_t sp_budget = kDefaultGridBudget;
  std::uint64_t sp_seed = 0;
  sp->add_option("--n-list", sp_n, "comma-separated qubit counts");
  sp->add_option("--p-list", sp_p, "comma-separated layer counts");
  sp->add_option("--graphs", sp_graphs, "graphs per cell");
  sp->add_option("--threshold", sp_threshold, "relative sparsity threshold");
  sp->add_option("--budget", sp_budget, "full-grid budget");
  sp->add_option("--seed", sp_seed, "RNG seed")->required();
  sp->add_option("--out", sp_out, "output CSV")->required();

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "out-of-sample error of a recovered polynomial");
  std::string e_poly, e_graph, e_out;
  int e_p = 1;
  std::size_t e_points = 100;
  std::uint64_t e_seed = 0;
  ev->add_option("--poly", e_poly, "polynomial JSON")->required();
  ev->add_option("--graph", e_graph, "graph JSON")->required();
  ev->add_option("--p", e_p, "QAOA layers")->required();
  ev->add_option("--points", e_points, "test point count");
  ev->add_option("--seed", e_seed, "RNG seed")->required();
  ev->add_option("--out", e_out, "output JSON");

  // optimize
  auto* opt = app.add_subcommand("optimize", "gradient descent on true or recovered landscapes");
  std::string o_graph, o_mode = "true", o_poly, o_lattice = "lightcone", o_out;
  int o_p = 1, o_restarts = 100, o_iters = 200;
  double o_step = 0.05, o_fd = 1e-3;
  std::uint64_t o_seed = 0;
  opt->add_option("--graph", o_graph, "graph JSON")->required();
  opt->add_option("--p", o_p, "QAOA layers")->required();
  opt->add_option("--mode", o_mode, "true | recovered");
  opt->add_option("--poly", o_poly, "recovered polynomial JSON (recovered mode)");
  opt->add_option("--restarts", o_restarts, "random restarts");
  opt->add_option("--iters", o_iters, "GD iterations");
  opt->add_option("--step", o_step, "GD step size");
  opt->add_option("--fd-step", o_fd, "finite-difference step");
  opt->add_option("--lattice", o_lattice, "reference-scan lattice: global | lightcone");
  opt->add_option("--seed", o_seed, "RNG seed")->required();
  opt->add_option("--out", o_out, "output CSV")->required();

  // gorge
  auto* go = app.add_subcommand("gorge", "narrow-gorge recoverability diagnostics");
  std::string go_samples, go_out;
  std::size_t go_m = 100;
  int go_shots = 0;
  std::uint64_t go_seed = 0;
  go->add_option("--samples", go_samples, "full-grid sample-set JSON")->required();
  go->add_option("--m", go_m, "random sample count");
  go->add_option("--shots", go_shots, "shots per sample (0 = noiseless)");
  go->add_option("--seed", go_seed, "RNG seed")->required();
  go->add_option("--out", go_out, "output JSON")->required();

  // clifford
  auto* cl = app.add_subcommand("clifford", "closed-form cost of a Clifford+rotation circuit");
  std::string c_circuit, c_obs, c_input, c_out;
  cl->add_option("--circuit", c_circuit, "circuit JSON")->required();
  cl->add_option("--observable", c_obs, "observable JSON")->required();
  cl->add_option("--input", c_input, "computational basis input, qubit 0 first")->required();
  cl->add_option("--out", c_out, "output polynomial JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    set_max_threads(threads);
    if (graph->parsed()) return cmd_graph(g_n, g_degree, g_seed, g_out);
    if (sample->parsed()) {
      return cmd_sample(s_graph, s_p, s_lattice, s_mode, s_m, s_shots, s_seed, s_out, s_budget);
    }
    if (rec->parsed()) {
      const BpdnConfig config = config_from_flags(r_alpha, r_lambda, r_lambda_scale, r_fista,
                                                  r_gd, r_support_threshold);
      return cmd_recover(r_samples, r_out, r_diag, r_csv, r_holdout, r_accept, config,
                         r_seed);
    }
    if (sp->parsed()) {
      return cmd_sparsity(sp_n, sp_p, sp_graphs, sp_seed, sp_threshold, sp_budget, sp_out);
    }
    if (ev->parsed()) return cmd_evaluate(e_poly, e_graph, e_p, e_points, e_seed, e_out);
    if (opt->parsed()) {
      GdParams params;
      params.step = o_step;
      params.iters = o_iters;
      params.fd_step = o_fd;
      return cmd_optimize(o_graph, o_p, o_mode, o_poly, o_restarts, params, o_lattice, o_seed,
                          o_out);
    }
    if (go->parsed()) return cmd_gorge(go_samples, go_m, go_seed, go_shots, go_out);
    if (cl->parsed()) return cmd_clifford(c_circuit, c_obs, c_input, c_out);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
