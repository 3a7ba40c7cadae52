#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "kitaev/circuit.hpp"
#include "kitaev/pauli.hpp"

namespace kitaev {

// Little-endian statevector: qubit 0 is the least significant bit of the
// amplitude index.
struct StateVector {
    int n = 0;
    Eigen::VectorXcd amp;

    static StateVector zero_state(int n);
    // Throws std::invalid_argument on size mismatch or norm off 1 by 1e-12.
    void check() const;
};

struct DensityMatrix {
    int n = 0;
    Eigen::MatrixXcd rho;

    // Structural invariants: Hermitian and unit trace to 1e-12. With
    // with_psd also verifies eigenvalues >= -1e-10.
    void check(bool with_psd = false) const;
};

// Pure-dephasing channel parameters. The effective dephasing time of one
// application is t2_star + a * jitter_b with a drawn uniformly from [-1, 1],
// once per dephase call, from a generator seeded with `seed`.
struct NoiseModel {
    double t2_star = 1.0;
    double tau = 0.0;
    double jitter_b = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SampledExpectation {
    double estimate = 0.0;
    double std_error = 0.0;
};

void apply_gate(StateVector& psi, const Gate& gate);

// U_circuit |0...0>.
StateVector apply_circuit(const GaussianCircuit& circuit);

// <psi|O|psi>. Throws NonHermitianObservable; a residual imaginary part
// above 1e-10 (impossible for a Hermitian O) aborts via std::runtime_error.
double expectation(const PauliSum& obs, const StateVector& psi);

DensityMatrix to_density(const StateVector& psi);

// Computational-basis pure dephasing: diagonal preserved exactly,
// off-diagonal entries scaled by exp(-tau / T2_eff).
DensityMatrix dephase(const DensityMatrix& rho, const NoiseModel& noise);

// Tr(rho O).
double noisy_expectation(const DensityMatrix& rho, const PauliSum& obs);

// Measures each Pauli string of `obs` independently in its eigenbasis with
// `shots` repetitions (binomial draw per string, one generator across the
// call) and aggregates the weighted estimate and standard error.
// Deterministic for a fixed seed on a fixed platform.
SampledExpectation sample_expectation(const StateVector& psi,
                                      const PauliSum& obs, long shots,
                                      std::uint64_t seed);

// Maps a gate count and a per-gate duration to a circuit duration tau.
double circuit_duration(int gate_count, double per_gate);

}  // namespace kitaev
