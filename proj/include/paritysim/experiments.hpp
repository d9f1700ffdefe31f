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

#include <map>
#include <string>
#include <vector>

#include "paritysim/evolve.hpp"
#include "paritysim/parity_model.hpp"

namespace paritysim {

/// A frozen annealing setup: instance, conditions, initial state, schedule.
struct SweepSetup {
    std::string name;
    BuiltinInstance builtin;
    std::vector<SideCondition> conditions;
    std::vector<int> initial_config;
    Schedule schedule;
};

/// Registered presets: fig2a, fig2b, fig5a, fig5b, fig9a, fig9b, deg-i,
/// deg-ii, deg-iii, deg-iv.  Parameters are frozen so tests and the CLI
/// address them by name.  Throws on unknown preset.
SweepSetup preset(const std::string& name);
std::vector<std::string> preset_names();

struct ExperimentReport {
    std::string experiment_id;
    std::string input_digest;
    /// Probabilities of the instance's labelled reference states plus any
    /// other basis state above 1e-6, keyed "psi<n>" or "b<index>".
    std::map<std::string, double> final_probabilities;
    Trajectory trajectory;
    std::vector<std::string> notes;
};

ExperimentReport run_sweep(const SweepSetup& setup,
                           const EvolveOptions& options = {});

struct TfScanPoint {
    double t_final = 0.0;
    double p_ground = 0.0;  // conditioned ground manifold
    double p_first = 0.0;   // first excited conditioned level
};

/// Overlap probabilities with the two lowest conditioned levels (from the
/// brute-force oracle) for each final annealing time.
std::vector<TfScanPoint> success_vs_tf(const SweepSetup& setup,
                                       const std::vector<double>& tf_list,
                                       const EvolveOptions& options = {},
                                       int jobs = 1);

struct DegeneracyPoint {
    double t_final = 0.0;
    /// Probability per state of the degenerate conditioned manifold, in
    /// reference order (psi3, psi4, psi5).
    std::vector<double> manifold_probabilities;
};

/// The four valid exchange graphs over the condition {0,2,5}:
/// i: (0,2),(2,5); ii: (0,2),(0,5); iii: (0,5),(2,5); iv: all three.
std::vector<std::pair<int, int>> degeneracy_exchange_variant(
    const std::string& variant);

std::vector<DegeneracyPoint> degeneracy_distribution(
    const std::string& variant, const std::vector<double>& tf_list,
    const EvolveOptions& options = {}, int jobs = 1);

/// The two-overlapping-conditions run: conditions {0,1,2} = -1 and
/// {2,3,4} = -1 on the fig1 instance with the combined exchange over the
/// union.  Records the union magnetization and both per-condition sums along
/// the trajectory (only the union sum is conserved).
ExperimentReport overlapping_conditions_run(std::span<const int> initial_config,
                                            const EvolveOptions& options = {},
                                            double t_final = 500.0);

}  // namespace paritysim
