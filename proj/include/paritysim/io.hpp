// Copyright 2026 The paritysim developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "paritysim/evolve.hpp"
#include "paritysim/experiments.hpp"
#include "paritysim/parity_model.hpp"
#include "paritysim/qaoa.hpp"

namespace paritysim {

inline constexpr const char* kVersion = "0.1.0";

/// Parse an instance plus side conditions from the JSON schema
/// {"qubits": [[2,3],...], "fields": [...],
///  "constraints": [{"members": [...], "strength": -4.0}, ...],
///  "side_conditions": [{"members": [...], "value": -1,
///                       "exchange_edges": [[0,1],...]}]}.
/// Every invariant is checked; messages carry the offending element path.
struct InstanceFile {
    CompiledInstance instance;
    std::vector<SideCondition> side_conditions;
};

InstanceFile load_instance_json(const std::filesystem::path& path);
InstanceFile parse_instance_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const CompiledInstance& instance,
                                const std::vector<SideCondition>& conditions);

/// FNV-1a over the canonical (sorted-key, compact) dump; hex string.
std::string digest_of(const nlohmann::json& j);

/// Deterministic float formatting shared by every CSV writer, so identical
/// configurations reproduce byte-identical files.
std::string format_double(double v);

/// Columns: s, E_evol, sz_0..sz_{K-1}, m_C (one column per condition).
void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& trajectory,
                          const std::string& digest);

/// Columns: s, sector, level, energy, delta_E.  Sector is the magnetization
/// for a single conserved component, otherwise an index into the legend in
/// the metadata file.
void write_spectrum_csv(const std::filesystem::path& path,
                        const SectorSpectrum& spectrum,
                        const std::string& digest);

void write_report_json(const std::filesystem::path& path,
                       const ExperimentReport& report,
                       const nlohmann::json& parameters);

/// Columns: case_id, members, c, P_exchange, P_penalty.
void write_comparison_csv(const std::filesystem::path& path,
                          const std::vector<ProtocolComparisonCase>& table,
                          const std::string& digest);

/// Run metadata capturing every parameter plus the code version.
void write_metadata_json(const std::filesystem::path& path,
                         const std::string& experiment_id,
                         const nlohmann::json& parameters);

}  // namespace paritysim
