// Copyright 2026 The Shadowguard Authors
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
#include <vector>

#include <json.hpp>

#include "shadowguard/circuit.hpp"
#include "shadowguard/experiments.hpp"
#include "shadowguard/graph.hpp"
#include "shadowguard/optimizer.hpp"
#include "shadowguard/pauli.hpp"
#include "shadowguard/shadows.hpp"

namespace shadowguard {

using Json = nlohmann::json;

// Pauli strings are serialized as "X0 Z3" tokens; the identity is "".
std::string pauli_string(const PauliTerm& term);
PauliTerm parse_pauli_string(const std::string& text, double coefficient);

Json to_json(const ObservableSum& obs);
ObservableSum observable_from_json(const Json& j);

Json to_json(const Graph& graph);
Graph graph_from_json(const Json& j);

Json to_json(const CircuitSpec& circuit);
CircuitSpec circuit_from_json(const Json& j);

Json to_json(const Params& params);
Params params_from_json(const Json& j);

Json to_json(const ShadowSet& shadows);
ShadowSet shadow_set_from_json(const Json& j);

Json to_json(const RunRecord& record);

Json to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const Json& j);

// Config parsing: unknown keys are rejected so typos fail loudly.
BpScanConfig bp_scan_config_from_json(const Json& j);
SmallAngleConfig small_angle_config_from_json(const Json& j);
StepBoundConfig step_bound_config_from_json(const Json& j);
VqeConfig vqe_config_from_json(const Json& j);

Json to_json(const BpScanConfig& config);
Json to_json(const SmallAngleConfig& config);
Json to_json(const StepBoundConfig& config);
Json to_json(const VqeConfig& config);

/**
 * @brief CSV with `# key: value` comment lines (config echo, version)
 * followed by a fixed header row. Doubles are rendered with %.17g so a
 * rerun with the same seed is byte-identical.
 */
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments);

std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& contents);

} // namespace shadowguard
