#pragma once

#include <Eigen/Dense>

#include "kitaev/pauli.hpp"

namespace kitaev {

struct ExactSpectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns, matching order
};

// Builds the dense 2^n x 2^n matrix of a Hermitian Pauli operator and fully
// diagonalizes it. Qubit k maps to bit k of the basis index (little-endian).
// Throws DimensionCapExceeded when n exceeds `cap` and NonHermitianObservable
// when the operator fails a Hermiticity check.
ExactSpectrum exact_diagonalize(const PauliSum& h, int cap = 12);

// Dense matrix of an arbitrary Pauli operator (same basis convention).
Eigen::MatrixXcd pauli_matrix(const PauliSum& op, int cap = 12);

}  // namespace kitaev
