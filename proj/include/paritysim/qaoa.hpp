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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "paritysim/operators.hpp"
#include "paritysim/parity_model.hpp"
#include "paritysim/types.hpp"

namespace paritysim {

enum class ProtocolKind {
    /// Hard side condition via staggered hopping unitaries on [C].
    exchange,
    /// Side condition via a quadratic energy penalty; all qubits driven.
    penalty,
};

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::exchange;
    int layers = 1;  // p
    CompiledInstance instance;
    SideCondition condition;
    double penalty_weight = 4.0;  // only used by the penalty protocol

    /// alpha, beta, gamma per layer, plus one angle per exchange edge for
    /// the exchange protocol.
    int parameters_per_layer() const;
    int parameter_count() const { return layers * parameters_per_layer(); }
};

/// Exchange protocol: conditioned qubits start in the basis pattern with the
/// first member at -c and the rest at c, remaining qubits in |+>.  Penalty
/// protocol: uniform superposition of all basis states.  Throws if
/// |c| = |members| (the exchange drive would act trivially).
StateVector prepare_initial_state(const ProtocolSpec& protocol);

/// Multiply amplitudes by exp(-i*angle*diagonal).  Exact.
void apply_phase(StateVector& state, const DiagonalOperator& diagonal,
                 double angle);

/// exp(-i*angle*sigma^x) on one qubit: the exact 2x2 rotation.
void apply_x_rotation(StateVector& state, int qubit, double angle);

/// exp(-i*angle*(sigma_i^+ sigma_j^- + h.c.)): rotates each anti-aligned
/// amplitude pair by the closed-form 2x2 block, identity on aligned pairs.
void apply_exchange_unitary(StateVector& state, int i, int j, double angle);

/// Run the full layered circuit from the protocol's initial state.  Per
/// layer: final-Hamiltonian phase, constraint phase, driver rotations, then
/// (exchange protocol) one staggered hopping unitary per edge in listed
/// order.
StateVector qaoa_state(const ProtocolSpec& protocol,
                       std::span<const double> params);

/// <H_C + H_final>, plus the weighted quadratic penalty for the penalty
/// protocol.
double cost(const ProtocolSpec& protocol, const StateVector& state);

struct OptimizeTracePoint {
    int iteration = 0;
    double cost = 0.0;
    double p_target = 0.0;
};

struct OptimizeResult {
    std::vector<double> best_params;
    double best_cost = 0.0;
    double best_p_target = 0.0;   // max over restarts after optimization
    bool degenerate_target = false;
    std::vector<std::size_t> target_states;
    std::vector<OptimizeTracePoint> best_trace;
};

struct OptimizeOptions {
    int restarts = 100;
    int iterations_per_restart = 2000;
    std::uint64_t seed = 1;
    int jobs = 1;
};

/// Random-walk descent: per iteration one uniformly chosen parameter is
/// perturbed by uniform(-0.1, 0.1) and the update is kept iff the cost
/// strictly decreases.  Restarts draw fresh parameters uniformly from
/// [0, 2pi).  P_target sums over the conditioned ground manifold when it is
/// degenerate.  Fully deterministic for a fixed seed.
OptimizeResult optimize(const ProtocolSpec& protocol,
                        const OptimizeOptions& options = {});

struct ProtocolComparisonCase {
    std::string case_id;
    std::vector<int> members;
    int c = 0;
    bool ground_state_satisfies = false;
    double p_exchange = 0.0;
    double p_penalty = 0.0;
};

/// The 12-case comparison harness: three row and three column conditions
/// with c = +-1, exchange (p=1) vs penalty (p=2), optimized independently.
std::vector<ProtocolComparisonCase> compare_protocols(
    const CompiledInstance& instance, const OptimizeOptions& options = {});

}  // namespace paritysim
