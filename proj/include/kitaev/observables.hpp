#pragma once

#include <vector>

#include "kitaev/chain_spec.hpp"
#include "kitaev/pauli.hpp"
#include "kitaev/simulator.hpp"

namespace kitaev {

// Majorana operator gamma_m for m in 1..2n:
//   gamma_{2k-1} = (prod_{j<k} Z_j) X_k,  gamma_{2k} = (prod_{j<k} Z_j) Y_k
// (sites k are 1-based here to match the index convention m = 1..2n).
// Throws std::out_of_range for m outside 1..2n.
PauliSum majorana_operator(int m, int n);

// i gamma_1 gamma_m, Hermitian for m >= 2. m = 1 names the non-Hermitian
// i gamma_1 gamma_1 and throws NonHermitianObservable; m outside 1..2n
// throws std::out_of_range.
PauliSum site_correlation_op(int m, int n);

// Edge-to-edge correlation i gamma_1 gamma_{2n}.
PauliSum edge_correlation_op(int n);

// Fermion parity prod_k (1 - 2 c^d_k c_k) = Z Z ... Z.
PauliSum parity_op(int n);

// Particle number sum_k (1 - Z_k) / 2.
PauliSum number_op(int n);

// Jordan-Wigner image of the chain Hamiltonian.
PauliSum hamiltonian_op(const ChainSpec& spec);

struct MeasureRecord {
    std::vector<int> label;
    double mu = 0.0;
    double energy = 0.0;
    double parity = 0.0;
    double number = 0.0;
    double edge_corr = 0.0;
};

// Evaluates energy, parity, particle number and the edge correlation on one
// state; `label` is carried through for bookkeeping.
MeasureRecord measure_all(const StateVector& psi, const ChainSpec& spec,
                          const std::vector<int>& label);

}  // namespace kitaev
