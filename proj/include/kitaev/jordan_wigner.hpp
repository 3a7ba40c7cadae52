#pragma once

#include "kitaev/fermion_op.hpp"
#include "kitaev/pauli.hpp"

namespace kitaev {

// Maps ladder operators to Pauli strings with Z parity tails:
//   c_k   -> (prod_{j<k} Z_j) (X_k + i Y_k) / 2
//   c^d_k -> (prod_{j<k} Z_j) (X_k - i Y_k) / 2
// Qubit k is site k; strings are ordered site-ascending. A Hermitian input
// yields real string coefficients.
PauliSum jordan_wigner(const FermionOperator& op, int n);

}  // namespace kitaev
