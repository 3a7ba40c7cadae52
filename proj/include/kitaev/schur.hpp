#pragma once

#include <Eigen/Dense>

namespace kitaev {

// Canonical form of a real antisymmetric matrix: R A R^T = [[0, E], [-E, 0]]
// with E = diag(eps), eps ascending and non-negative. The rows of R are
// ordered (w_1..w_n, u_1..u_n) with w_i^T A u_j = eps_i delta_ij.
struct SchurForm {
    Eigen::MatrixXd R;
    Eigen::VectorXd eps;
};

// Computes the canonical form via Hermitian diagonalization of iA with real
// recombination; inputs with exactly vanishing diagonal blocks (the blocked
// Majorana layout of a real Hamiltonian) take a structured SVD route that
// keeps the two index halves separated. Throws std::invalid_argument for
// non-square, odd-dimensional, or non-antisymmetric input.
SchurForm schur_antisymmetric(const Eigen::MatrixXd& A);

// Pfaffian of a real antisymmetric matrix by Parlett-Reid elimination with
// partial pivoting. Takes its argument by value (the copy is destroyed).
// Odd dimension gives 0; empty input gives 1.
double pfaffian(Eigen::MatrixXd A);

}  // namespace kitaev
