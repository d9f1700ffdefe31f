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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paritysim/types.hpp"

namespace paritysim {

/// A k-body spin Hamiltonian over n_spins logical spins: each term is a
/// nonempty, sorted, duplicate-free index subset with a real coefficient.
struct LogicalProblem {
    int n_spins = 0;
    std::vector<std::pair<std::vector<int>, double>> terms;

    void validate() const;  // throws std::invalid_argument on violation
};

/// A physical qubit representing the product of the logical spins in its
/// label, e.g. {2,3} for the pair product s2*s3.
struct ParityQubit {
    std::vector<int> label;  // sorted, nonempty, duplicate-free
};

struct ParityConstraint {
    std::vector<int> members;  // sorted qubit indices
    double strength = -4.0;
};

/// A hard side condition: the spins of `members` must sum to `value`.
/// The exchange graph over `members` defines which hopping moves the
/// driver may perform; it must be connected so every state of the target
/// magnetization is reachable.
struct SideCondition {
    std::vector<int> members;
    int value = 0;
    std::vector<std::pair<int, int>> exchange_edges;

    /// Nearest-neighbour chain in listed member order, the default graph.
    static SideCondition chain(std::vector<int> members, int value);

    void validate(int n_qubits) const;
};

struct CompiledInstance {
    std::vector<ParityQubit> qubits;
    std::vector<double> fields;  // one local field per qubit
    std::vector<ParityConstraint> constraints;
    std::optional<std::vector<std::pair<int, int>>> grid_positions;

    int n_qubits() const { return static_cast<int>(qubits.size()); }
    int n_logical_spins() const;
    /// constraints - K + N; non-negative for a consistent instance.
    int degeneracy_parameter() const;
    void validate() const;
};

/// True iff every logical spin index appears an even number of times across
/// the member labels, i.e. the product of the represented spin products is
/// identically +1 over all logical configurations.
bool constraint_is_valid(std::span<const int> members,
                         const std::vector<ParityQubit>& qubits);

/// Field-only part of the classical energy, sum_i J_i s_i.
double field_energy(const CompiledInstance& instance,
                    std::span<const int> config);

/// Full classical energy, sum_i J_i s_i + sum_l C_l prod_{i in P_l} s_i.
double parity_energy(const CompiledInstance& instance,
                     std::span<const int> config);

/// True iff every constraint product evaluates to +1 on the configuration.
bool satisfies_all_constraints(const CompiledInstance& instance,
                               std::span<const int> config);

struct ConditionedGroundStates {
    double energy = 0.0;  // field-only energy of the minimum
    std::vector<std::vector<int>> configs;
};

/// Brute-force oracle: enumerate all 2^K configurations, keep those with all
/// constraint products +1 and all side-condition sums satisfied, and return
/// the minimum-field-energy set.  Throws std::runtime_error if the feasible
/// set is empty.
ConditionedGroundStates conditioned_ground_states(
    const CompiledInstance& instance,
    const std::vector<SideCondition>& conditions);

/// All constraint- and condition-satisfying basis states sorted by field
/// energy (ties by basis index).  The unrestricted feasible spectrum is
/// obtained with an empty condition list.
std::vector<std::pair<double, std::size_t>> conditioned_spectrum(
    const CompiledInstance& instance,
    const std::vector<SideCondition>& conditions);

/// A built-in instance bundled with its tabulated low-energy reference
/// configurations (labelled psi0, psi1, ... in reports) and their
/// field-only energies.
struct BuiltinInstance {
    std::string name;
    CompiledInstance instance;
    std::vector<std::vector<int>> reference_states;
    std::vector<double> reference_energies;
};

/// The 9-qubit instance of the main worked example: qubit order
/// (23, 12, 26, 34, 14, 16, 35, 45, 56), two 3-body and two 4-body
/// constraints of strength -4.
BuiltinInstance builtin_fig1();

/// The 9-qubit instance of the degenerate-manifold example, sites 0..8.
/// Its conditioned ground state under sum(s0,s2,s5) = -1 is threefold
/// degenerate.
BuiltinInstance builtin_degeneracy();

/// Lookup by name ("fig1" | "degeneracy"); throws on unknown name.
BuiltinInstance builtin_instance(const std::string& name);

}  // namespace paritysim
