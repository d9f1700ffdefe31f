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
#include "paritysim/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace paritysim {

double DiagonalOperator::expectation(const StateVector& state) const {
    if (entries.size() != state.dim()) {
        throw std::invalid_argument("diagonal/state dimension mismatch");
    }
    double acc = 0.0;
    for (std::size_t b = 0; b < entries.size(); ++b) {
        acc += entries[b] * std::norm(state.amplitudes[b]);
    }
    return acc;
}

DiagonalOperator build_h_init(std::span<const int> initial_config) {
    const int K = static_cast<int>(initial_config.size());
    DiagonalOperator op;
    op.entries.resize(dim_of(K));
    for (std::size_t b = 0; b < op.entries.size(); ++b) {
        double e = 0.0;
        for (int i = 0; i < K; ++i) {
            e += -static_cast<double>(initial_config[i]) * spin_at(b, i);
        }
        op.entries[b] = e;
    }
    return op;
}

std::pair<DiagonalOperator, DiagonalOperator> build_final_and_constraint_diagonals(
    const CompiledInstance& instance) {
    const int K = instance.n_qubits();
    const std::size_t dim = dim_of(K);
    DiagonalOperator h_final, h_c;
    h_final.entries.resize(dim);
    h_c.entries.resize(dim);
    std::vector<std::size_t> masks;
    masks.reserve(instance.constraints.size());
    for (const auto& c : instance.constraints) {
        std::size_t m = 0;
        for (int q : c.members) m |= std::size_t{1} << q;
        masks.push_back(m);
    }
    for (std::size_t b = 0; b < dim; ++b) {
        double e = 0.0;
        for (int i = 0; i < K; ++i) e += instance.fields[i] * spin_at(b, i);
        h_final.entries[b] = e;
        double ec = 0.0;
        for (std::size_t l = 0; l < masks.size(); ++l) {
            const int parity = std::popcount(b & masks[l]) & 1;
            ec += instance.constraints[l].strength * (1 - 2 * parity);
        }
        h_c.entries[b] = ec;
    }
    return {std::move(h_final), std::move(h_c)};
}

DiagonalOperator build_penalty_diagonal(int n_qubits,
                                        const SideCondition& condition,
                                        double weight) {
    if (weight <= 0.0) {
        throw std::invalid_argument("penalty weight must be positive");
    }
    DiagonalOperator op;
    op.entries.resize(dim_of(n_qubits));
    for (std::size_t b = 0; b < op.entries.size(); ++b) {
        const double r = subset_spin_sum(b, condition.members) - condition.value;
        op.entries[b] = weight * r * r;
    }
    return op;
}

HamiltonianTerms build_hamiltonian_terms(const CompiledInstance& instance,
                                         const std::vector<SideCondition>& conditions,
                                         std::span<const int> initial_config) {
    const int K = instance.n_qubits();
    if (static_cast<int>(initial_config.size()) != K) {
        throw std::invalid_argument("initial configuration length mismatch");
    }
    HamiltonianTerms terms;
    terms.n_qubits = K;
    terms.h_init = build_h_init(initial_config);
    std::tie(terms.h_final, terms.h_constraint) =
        build_final_and_constraint_diagonals(instance);

    std::vector<bool> conditioned(K, false);
    for (const auto& cond : conditions) {
        for (int q : cond.members) conditioned[q] = true;
        terms.off_diagonal.exchange_edges.insert(
            terms.off_diagonal.exchange_edges.end(), cond.exchange_edges.begin(),
            cond.exchange_edges.end());
    }
    for (int i = 0; i < K; ++i) {
        if (!conditioned[i]) terms.off_diagonal.x_sites.push_back(i);
    }
    return terms;
}

void apply_hamiltonian(const Weights& w, const HamiltonianTerms& terms,
                       const StateVector& in, StateVector& out) {
    const std::size_t dim = in.dim();
    if (terms.h_init.entries.size() != dim) {
        throw std::invalid_argument("operator/state dimension mismatch");
    }
    out.n_qubits = in.n_qubits;
    out.amplitudes.resize(dim);

    const double* di = terms.h_init.entries.data();
    const double* dc = terms.h_constraint.entries.data();
    const double* df = terms.h_final.entries.data();
    const Complex* v = in.amplitudes.data();
    Complex* o = out.amplitudes.data();

    for (std::size_t b = 0; b < dim; ++b) {
        o[b] = (w.a * di[b] + w.c * dc[b] + w.d * df[b]) * v[b];
    }
    if (w.b != 0.0) {
        for (int site : terms.off_diagonal.x_sites) {
            const std::size_t bit = std::size_t{1} << site;
            for (std::size_t b = 0; b < dim; ++b) {
                o[b] += w.b * v[b ^ bit];
            }
        }
    }
    if (w.e != 0.0) {
        const double ce = w.e * terms.off_diagonal.exchange_coefficient;
        for (const auto& [i, j] : terms.off_diagonal.exchange_edges) {
            const std::size_t bi = std::size_t{1} << i;
            const std::size_t bj = std::size_t{1} << j;
            const std::size_t mask = bi | bj;
            for (std::size_t b = 0; b < dim; ++b) {
                const std::size_t bits = b & mask;
                if (bits == bi || bits == bj) {
                    o[b] += ce * v[b ^ mask];
                }
            }
        }
    }
}

double magnetization_expectation(const StateVector& state,
                                 std::span<const int> members) {
    std::size_t mask = 0;
    for (int q : members) mask |= std::size_t{1} << q;
    const int n = static_cast<int>(members.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const int m = n - 2 * std::popcount(b & mask);
        acc += m * std::norm(state.amplitudes[b]);
    }
    return acc;
}

Eigen::MatrixXcd dense_matrix(const Weights& weights,
                              const HamiltonianTerms& terms) {
    if (terms.n_qubits > 14) {
        throw std::invalid_argument("dense_matrix is guarded to K <= 14");
    }
    const std::size_t dim = dim_of(terms.n_qubits);
    Eigen::MatrixXcd m(dim, dim);
    StateVector unit(terms.n_qubits), col(terms.n_qubits);
    for (std::size_t j = 0; j < dim; ++j) {
        std::fill(unit.amplitudes.begin(), unit.amplitudes.end(), Complex{0, 0});
        unit.amplitudes[j] = Complex{1.0, 0.0};
        apply_hamiltonian(weights, terms, unit, col);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = col.amplitudes[i];
    }
    return m;
}

}  // namespace paritysim
