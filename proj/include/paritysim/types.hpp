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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paritysim {

using Complex = std::complex<double>;

/// Basis convention, fixed globally: bit i of a basis index equals
/// (1 - s_i)/2, i.e. bit 0 corresponds to spin +1, little-endian in the
/// qubit index.  All diagonal operators, state vectors and file formats
/// share this indexing.
inline std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

inline int spin_at(std::size_t basis_index, int qubit) {
    return 1 - 2 * static_cast<int>((basis_index >> qubit) & 1U);
}

std::size_t basis_index_of(std::span<const int> spins);
std::vector<int> spins_of(std::size_t basis_index, int n_qubits);

/// Sum of spins over a subset of qubits, evaluated on a basis index.
int subset_spin_sum(std::size_t basis_index, std::span<const int> members);

/// Normalized complex amplitudes over the computational basis of K qubits.
struct StateVector {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    StateVector() = default;
    explicit StateVector(int K)
        : n_qubits(K), amplitudes(dim_of(K), Complex{0.0, 0.0}) {}

    static StateVector basis_state(int K, std::size_t index);
    static StateVector basis_state(std::span<const int> spins);

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
    void normalize();
    Complex overlap(const StateVector& other) const;  // <this|other>
    double probability(std::size_t basis_index) const;
};

}  // namespace paritysim
