#pragma once

#include <vector>

#include "kitaev/chain_spec.hpp"
#include "kitaev/circuit.hpp"

namespace kitaev {

// Compiles the exact eigenstate-preparation circuit for the eigenstate
// labeled by `excitation_set` (quasiparticle mode indices, energies
// ascending). Applying the result to |0...0> prepares the eigenstate.
// Throws DegenerateHamiltonian when two quasiparticle energies coincide to
// 1e-12 relative (approach mu = 0 as mu = 1e-8), std::invalid_argument on a
// malformed spec or excitation set.
GaussianCircuit compile_eigenstate(const ChainSpec& spec,
                                   const std::vector<int>& excitation_set);

// Energy of the labeled eigenstate, c0 - sum(eps) + sum_{j in set} 2 eps_j.
// Throws DegenerateHamiltonian under the same condition as
// compile_eigenstate (labels are ill-defined when mode energies coincide).
double eigenstate_energy(const ChainSpec& spec,
                         const std::vector<int>& excitation_set);

// Fermion parity (+1 or -1) of the lowest-energy eigenstate, computed from
// the sign of the Pfaffian of the Majorana coupling matrix. Throws
// DegenerateHamiltonian when the Pfaffian vanishes exactly.
int exact_ground_parity(const ChainSpec& spec);

// Per-gate angle deviation between the ground-state circuits of two chains
// with identical gate layout, one entry per RYXXY gate in temporal order.
// Angles are compared modulo the pi periodicity of the rotation's action on
// the relevant amplitude pair. Throws std::invalid_argument when the two
// layouts differ.
std::vector<double> gate_angle_deviation(const ChainSpec& spec_a,
                                         const ChainSpec& spec_b);

}  // namespace kitaev
