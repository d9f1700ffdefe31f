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

#include <cstddef>
#include <span>
#include <vector>

#include "paritysim/operators.hpp"
#include "paritysim/parity_model.hpp"
#include "paritysim/types.hpp"

namespace paritysim {

/// Annealing schedule: A(s) = (1-s)^2, B(s) = E(s) = gamma*s*(1-s),
/// C(s) = D(s) = s, with s = t/t_final in [0, 1].
struct Schedule {
    double gamma = 4.0;
    double t_final = 500.0;

    Weights weights_at(double s) const;  // throws if s outside [0, 1]
};

struct TrajectorySample {
    double s = 0.0;
    double energy = 0.0;            // <H(s)>
    std::vector<double> sz;         // <sigma^z_i> per qubit
    std::vector<double> condition_sums;  // <M_C> per side condition
    std::vector<double> tracked_probabilities;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    StateVector final_state;
    double max_norm_drift = 0.0;    // largest |norm-1| seen before renormalizing
    std::vector<std::size_t> tracked_states;
};

struct EvolveOptions {
    double dt = 0.002;
    int n_samples = 201;
    /// Norm drift allowed per unit time before the step size is rejected.
    double norm_drift_tolerance = 1e-6;
    std::vector<std::size_t> tracked_states;  // basis indices to record
};

/// Integrate i d|psi>/dt = H(t)|psi> from the basis state of initial_config
/// to t_final with a fixed-step classical 4th-order scheme, recording
/// observables on a uniform s grid.  The initial configuration must satisfy
/// every side condition; norm drift beyond tolerance raises.
Trajectory evolve_schroedinger(const CompiledInstance& instance,
                               const std::vector<SideCondition>& conditions,
                               const Schedule& schedule,
                               std::span<const int> initial_config,
                               const EvolveOptions& options = {});

/// Conserved qubit sets of the drive: connected components of the union
/// exchange graph over all conditions.  The sum of spins over each component
/// commutes with H(s) for every s.
std::vector<std::vector<int>> conserved_components(
    int n_qubits, const std::vector<SideCondition>& conditions);

struct SectorBlock {
    std::vector<int> magnetizations;  // one entry per conserved component
    std::vector<double> eigenvalues;  // ascending
};

struct SectorSpectrum {
    std::vector<std::vector<int>> components;
    std::vector<double> s_samples;
    std::vector<std::vector<SectorBlock>> blocks;  // [sample][sector]

    double ground_energy(std::size_t sample) const;
    /// Index of the sector whose magnetizations match; throws if absent.
    std::size_t sector_index(std::span<const int> magnetizations) const;
};

/// Diagonalize H(s) restricted to each magnetization sector at each sample.
/// Sector classification is structural (spin sums over conserved components),
/// exact even through degeneracies.  Guarded to K <= 14.
SectorSpectrum sector_spectrum(const CompiledInstance& instance,
                               const std::vector<SideCondition>& conditions,
                               const Schedule& schedule,
                               std::span<const int> initial_config,
                               std::span<const double> s_samples);

struct GapResult {
    double gap = 0.0;
    double s_at_min = 0.0;
};

/// Minimum gap between the two lowest levels of the target sector over the
/// schedule.  A coarse uniform grid locates the minimum; a 10x finer local
/// grid refines it.  target_magnetizations has one entry per conserved
/// component (a single value for one condition).
GapResult min_conditioned_gap(const CompiledInstance& instance,
                              const std::vector<SideCondition>& conditions,
                              const Schedule& schedule,
                              std::span<const int> initial_config,
                              std::span<const int> target_magnetizations,
                              int n_coarse_samples = 201);

}  // namespace paritysim
