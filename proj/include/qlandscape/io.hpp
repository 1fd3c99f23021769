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

#pragma once

#include <string>

#include <json.hpp>

#include "qlandscape/circuit.hpp"
#include "qlandscape/experiments.hpp"
#include "qlandscape/graph.hpp"
#include "qlandscape/sparse_recovery.hpp"
#include "qlandscape/trigpoly.hpp"

namespace qlandscape {

using Json = nlohmann::json;

// Graph: {"n": N, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& j);

// TrigPoly: {"max_freq": [...], "coeffs": [{"k": [...], "re": x, "im": y}, ...]}
// Only the canonical half-lattice is stored; doubles survive the round trip
// exactly (shortest-representation printing).
Json trigpoly_to_json(const TrigPoly& poly);
TrigPoly trigpoly_from_json(const Json& j);

// SampleSet: {"max_freq": [...], "points": [[theta...], ...], "values": [...],
//             "n_shots": int|null, "grid": bool}. With "grid": true the points
// are implicit (full grid in flat order) and "points" is omitted. The CLI
// additionally records the generating instance under "qaoa": {"n": N, "p": p}.
Json sample_set_to_json(const SampleSet& samples, bool grid_mode = false);
SampleSet sample_set_from_json(const Json& j);

// One "N,p,m,mse_rel,baseline_rel,s,seed" row (with header) for recovery
// experiment CSVs.
std::string recovery_row_csv(int n_qubits, int layers, const RecoveryResult& result,
                             std::uint64_t seed, bool with_header = true);

// GenericCircuit: {"n": N, "gates": [{"type": "h"|...|"rot", ...}]}
Json circuit_to_json(const GenericCircuit& circuit);
GenericCircuit circuit_from_json(const Json& j);

// Observable: [{"coeff": r, "pauli": "IXZ..."}]
Json observable_to_json(const Observable& observable);
Observable observable_from_json(const Json& j);

Json recovery_diagnostics_to_json(const RecoveryResult& result, const BpdnConfig& config,
                                  std::uint64_t seed);
Json gorge_report_to_json(const GorgeReport& report);

std::string sparsity_rows_to_csv(const std::vector<SparsityRow>& rows);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qlandscape
