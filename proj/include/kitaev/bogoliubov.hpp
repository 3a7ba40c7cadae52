#pragma once

#include <Eigen/Dense>

#include "kitaev/schur.hpp"

namespace kitaev {

// Mode-basis change from site fermions (c_1..c_n, c'_1..c'_n) to the
// quasiparticle ladder. Block structure W = [[W1*, W2*], [W2, W1]]; the top
// n rows (W_L) are the annihilation operators of the diagonalized form.
struct BogoliubovW {
    Eigen::MatrixXcd W;
    int n = 0;

    Eigen::MatrixXcd W1() const { return W.bottomRightCorner(n, n); }
    Eigen::MatrixXcd W2() const { return W.bottomLeftCorner(n, n); }
    Eigen::MatrixXcd WL() const { return W.topRows(n); }
};

// The fixed unitary relating Majorana and ladder bases,
// omega = [[1, 1], [i, -i]] / sqrt(2) in n x n blocks.
Eigen::MatrixXcd omega(int n);

// W = omega^dag R omega. Unitarity is asserted and the block-conjugation
// structure is then enforced exactly.
BogoliubovW bogoliubov_w(const SchurForm& schur);

}  // namespace kitaev
