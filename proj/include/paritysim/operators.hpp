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

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "paritysim/parity_model.hpp"
#include "paritysim/types.hpp"

namespace paritysim {

inline constexpr double kDefaultConstraintStrength = -4.0;
inline constexpr double kDefaultExchangeCoefficient = 0.5;

struct DiagonalOperator {
    std::vector<double> entries;  // exactly 2^K

    double expectation(const StateVector& state) const;
};

/// Off-diagonal pieces of the protocol Hamiltonian: single spin flips on the
/// driven qubits and hopping terms on the exchange edges.  x_sites and
/// exchange qubits are disjoint by construction.
struct OffDiagonalTerms {
    std::vector<int> x_sites;
    std::vector<std::pair<int, int>> exchange_edges;
    double exchange_coefficient = kDefaultExchangeCoefficient;
};

/// Weights (A, B, C, D, E) multiplying the initial, driver, constraint,
/// final and exchange pieces respectively.
struct Weights {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
};

/// All pieces of the time-dependent Hamiltonian for one annealing setup.
struct HamiltonianTerms {
    int n_qubits = 0;
    DiagonalOperator h_init;
    DiagonalOperator h_constraint;
    DiagonalOperator h_final;
    OffDiagonalTerms off_diagonal;
};

/// sum_i e_i sigma^z_i with e_i = -s_i(0), so the supplied classical state is
/// the unique ground state with energy -K.
DiagonalOperator build_h_init(std::span<const int> initial_config);

/// (H_final, H_C) diagonals of an instance: field sums and weighted
/// constraint products per basis state.
std::pair<DiagonalOperator, DiagonalOperator> build_final_and_constraint_diagonals(
    const CompiledInstance& instance);

/// weight * (sum_{i in members} s_i - value)^2 per basis state.
DiagonalOperator build_penalty_diagonal(int n_qubits,
                                        const SideCondition& condition,
                                        double weight);

/// Assemble all terms for an instance with side conditions: exchange edges
/// come from the conditions, single spin flips act on the remaining qubits.
HamiltonianTerms build_hamiltonian_terms(const CompiledInstance& instance,
                                         const std::vector<SideCondition>& conditions,
                                         std::span<const int> initial_config);

/// out = H|in> with H = A*H_init + B*H_drive + C*H_C + D*H_final +
/// E*H_exchange.  Matrix-free; no temporary beyond the output buffer.
void apply_hamiltonian(const Weights& weights, const HamiltonianTerms& terms,
                       const StateVector& in, StateVector& out);

/// <sum_{i in members} sigma^z_i> on a normalized state.
double magnetization_expectation(const StateVector& state,
                                 std::span<const int> members);

/// Dense Hermitian form of the same operator, for instantaneous spectra and
/// cross-checks.  Guarded to K <= 14.
Eigen::MatrixXcd dense_matrix(const Weights& weights,
                              const HamiltonianTerms& terms);

}  // namespace paritysim
