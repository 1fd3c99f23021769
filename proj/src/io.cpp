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

#include "qlandscape/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qlandscape/spectral.hpp"

namespace qlandscape {

Json graph_to_json(const Graph& graph) {
  graph.validate();
  Json j;
  j["n"] = graph.num_vertices;
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.num_vertices = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

Json trigpoly_to_json(const TrigPoly& poly) {
  Json j;
  j["max_freq"] = poly.lattice().max_freq();
  Json coeffs = Json::array();
  for (const auto& [flat, c] : poly.canonical_coeffs()) {
    Json entry;
    entry["k"] = poly.lattice().frequency_at(flat);
    entry["re"] = c.real();
    entry["im"] = c.imag();
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

TrigPoly trigpoly_from_json(const Json& j) {
  FrequencyLattice lattice(j.at("max_freq").get<std::vector<int>>());
  TrigPoly poly(std::move(lattice));
  for (const auto& entry : j.at("coeffs")) {
    const FrequencyVector k = entry.at("k").get<std::vector<int>>();
    if (!is_canonical(k)) throw std::invalid_argument("stored coefficients must be canonical");
    poly.set(k, Complex(entry.at("re").get<double>(), entry.at("im").get<double>()));
  }
  return poly;
}

Json sample_set_to_json(const SampleSet& samples, bool grid_mode) {
  Json j;
  j["max_freq"] = samples.lattice().max_freq();
  if (grid_mode) {
    if (samples.size() != samples.lattice().size()) {
      throw std::invalid_argument("grid mode requires one value per grid point");
    }
    j["grid"] = true;
  } else {
    j["grid"] = false;
    Json points = Json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) points.push_back(samples.point(i));
    j["points"] = std::move(points);
  }
  j["values"] = samples.values();
  if (samples.n_shots()) {
    j["n_shots"] = *samples.n_shots();
  } else {
    j["n_shots"] = nullptr;
  }
  return j;
}

SampleSet sample_set_from_json(const Json& j) {
  FrequencyLattice lattice(j.at("max_freq").get<std::vector<int>>());
  std::vector<double> values = j.at("values").get<std::vector<double>>();
  std::optional<int> n_shots;
  if (j.contains("n_shots") && !j.at("n_shots").is_null()) {
    n_shots = j.at("n_shots").get<int>();
  }
  if (j.value("grid", false)) {
    std::vector<std::size_t> idx(values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return SampleSet(std::move(lattice), std::move(idx), std::move(values), n_shots);
  }
  const auto points = j.at("points").get<std::vector<std::vector<double>>>();
  return SampleSet::from_points(std::move(lattice), points, std::move(values), n_shots);
}

Json circuit_to_json(const GenericCircuit& circuit) {
  circuit.validate();
  Json j;
  j["n"] = circuit.num_qubits;
  Json gates = Json::array();
  for (const Gate& g : circuit.gates) {
    Json entry;
    if (g.kind == Gate::Kind::Clifford) {
      entry["type"] = clifford_gate_name(g.clifford);
      entry["qubits"] = g.qubits;
    } else {
      entry["type"] = "rot";
      entry["pauli"] = g.generator.to_string();
      entry["param"] = g.param;
    }
    gates.push_back(std::move(entry));
  }
  j["gates"] = std::move(gates);
  return j;
}

GenericCircuit circuit_from_json(const Json& j) {
  GenericCircuit circuit;
  circuit.num_qubits = j.at("n").get<int>();
  for (const auto& entry : j.at("gates")) {
    const std::string type = entry.at("type").get<std::string>();
    if (type == "rot") {
      PauliString generator = PauliString::from_string(entry.at("pauli").get<std::string>());
      if (generator.num_qubits() != circuit.num_qubits) {
        throw std::invalid_argument("rotation generator qubit count mismatch");
      }
      circuit.gates.push_back(Gate::make_rotation(std::move(generator), entry.at("param").get<int>()));
    } else {
      circuit.gates.push_back(Gate::make_clifford(clifford_gate_from_name(type),
                                                  entry.at("qubits").get<std::vector<int>>()));
    }
  }
  circuit.validate();
  return circuit;
}

Json observable_to_json(const Observable& observable) {
  Json j = Json::array();
  for (const auto& [coeff, pauli] : observable) {
    Json entry;
    entry["coeff"] = coeff;
    entry["pauli"] = pauli.to_string();
    j.push_back(std::move(entry));
  }
  return j;
}

Observable observable_from_json(const Json& j) {
  Observable obs;
  for (const auto& entry : j) {
    obs.emplace_back(entry.at("coeff").get<double>(),
                     PauliString::from_string(entry.at("pauli").get<std::string>()));
  }
  return obs;
}

Json recovery_diagnostics_to_json(const RecoveryResult& result, const BpdnConfig& config,
                                  std::uint64_t seed) {
  Json j;
  j["m_used"] = result.m_used;
  j["s"] = result.support_size;
  j["oos_mse_rel"] = result.oos_mse_rel;
  j["baseline_mse_rel"] = result.baseline_mse_rel;
  j["fista_iterations"] = result.fista_iterations;
  j["accepted"] = result.accepted;
  j["seed"] = seed;
  Json cfg;
  cfg["alpha_fista"] = config.alpha_fista;
  cfg["lambda"] = config.lambda;
  cfg["lambda_scale"] = config.lambda_scale;
  cfg["n_fista"] = config.n_fista;
  cfg["alpha_gd"] = config.alpha_gd;
  cfg["n_gd"] = config.n_gd;
  cfg["support_threshold"] = config.support_threshold;
  j["config"] = std::move(cfg);
  return j;
}

Json gorge_report_to_json(const GorgeReport& report) {
  Json j;
  j["ratio"] = report.ratio;
  j["bound"] = report.bound;
  j["condition_met"] = report.condition_met;
  j["l2_sample_norm"] = report.l2_sample_norm;
  j["epsilon"] = report.epsilon;
  j["zero_feasible"] = report.zero_feasible;
  return j;
}

std::string recovery_row_csv(int n_qubits, int layers, const RecoveryResult& result,
                             std::uint64_t seed, bool with_header) {
  std::ostringstream out;
  if (with_header) out << "N,p,m,mse_rel,baseline_rel,s,seed\n";
  out << n_qubits << ',' << layers << ',' << result.m_used << ',' << result.oos_mse_rel << ','
      << result.baseline_mse_rel << ',' << result.support_size << ',' << seed << '\n';
  return out.str();
}

std::string sparsity_rows_to_csv(const std::vector<SparsityRow>& rows) {
  std::ostringstream out;
  out << "N,p,graph_seed,edges,n,s,threshold,status\n";
  for (const SparsityRow& r : rows) {
    out << r.num_qubits << ',' << r.layers << ',' << r.graph_seed << ',' << r.edges << ','
        << r.lattice_size << ',';
    if (r.ok) {
      out << r.sparsity;
    }
    out << ',' << r.threshold << ',' << (r.ok ? "ok" : "skipped") << '\n';
  }
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace qlandscape
