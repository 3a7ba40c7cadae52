#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kitaev/chain_spec.hpp"

namespace kitaev {

// 2n Bogoliubov-de Gennes eigenvalues of the chain, ascending. Normalized so
// the non-negative half reproduces the quasiparticle energies eps of the
// Majorana Schur form (the particle-hole block matrix carries a global 1/2).
Eigen::VectorXd bdg_spectrum(const ChainSpec& spec);

struct ParitySwitches {
    std::vector<double> mu_values;  // distinct non-negative, ascending
    bool imaginary_root = false;    // t^2 < delta^2: no real switch exists
};

// Chemical potentials mu_PS = 2 sqrt(t^2 - delta^2) cos(pi p / (n + 1)),
// p = 1..floor(n/2), where the finite chain's ground-state parity flips.
ParitySwitches parity_switch_mu(double t, double delta, int n);

// Critical chemical potential 2|t|(1 - 1/n) of the finite open chain.
double critical_mu(int n, double t);

struct WindingConfig {
    int k_samples = 4001;  // odd, >= 101

    void validate() const;
};

// Winding number of w(K) = arg[2 delta~ sin K + i (mu + 2 t~ cos K)] over
// K in [-pi, pi], with t~ = t (1 - 1/n) and delta~ = delta (1 - 1/n).
// Returns -1, 0 or +1; throws BoundaryPoint when the phase vector passes
// through the origin.
int winding_number(double mu, double t, double delta, int n,
                   const WindingConfig& cfg = {});

}  // namespace kitaev
