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
#include "paritysim/types.hpp"

#include <cmath>
#include <stdexcept>

namespace paritysim {

std::size_t basis_index_of(std::span<const int> spins) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] != 1 && spins[i] != -1) {
            throw std::invalid_argument("spin values must be +1 or -1");
        }
        if (spins[i] < 0) b |= std::size_t{1} << i;
    }
    return b;
}

std::vector<int> spins_of(std::size_t basis_index, int n_qubits) {
    std::vector<int> out(n_qubits);
    for (int i = 0; i < n_qubits; ++i) out[i] = spin_at(basis_index, i);
    return out;
}

int subset_spin_sum(std::size_t basis_index, std::span<const int> members) {
    int sum = 0;
    for (int q : members) sum += spin_at(basis_index, q);
    return sum;
}

StateVector StateVector::basis_state(int K, std::size_t index) {
    StateVector psi(K);
    psi.amplitudes.at(index) = Complex{1.0, 0.0};
    return psi;
}

StateVector StateVector::basis_state(std::span<const int> spins) {
    return basis_state(static_cast<int>(spins.size()), basis_index_of(spins));
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    return std::sqrt(n2);
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::runtime_error("cannot normalize the zero vector");
    for (auto& a : amplitudes) a /= n;
}

Complex StateVector::overlap(const StateVector& other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("state dimension mismatch");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim(); ++i) {
        acc += std::conj(amplitudes[i]) * other.amplitudes[i];
    }
    return acc;
}

double StateVector::probability(std::size_t basis_index) const {
    return std::norm(amplitudes.at(basis_index));
}

}  // namespace paritysim
