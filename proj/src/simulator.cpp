#include "kitaev/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "kitaev/errors.hpp"

namespace kitaev {

namespace {

using Complex = std::complex<double>;

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// <psi| O(x, z) |psi> for one product-form term, O|b> = (-1)^{z.b} |b ^ x>.
Complex product_term_braket(const Eigen::VectorXcd& amp, uint64_t x,
                            uint64_t z) {
    Complex acc = 0.0;
    const auto dim = static_cast<uint64_t>(amp.size());
    for (uint64_t b = 0; b < dim; ++b) {
        const double sign =
            (__builtin_popcountll(z & b) & 1) ? -1.0 : 1.0;
        acc += std::conj(amp[static_cast<Eigen::Index>(b ^ x)]) * sign *
               amp[static_cast<Eigen::Index>(b)];
    }
    return acc;
}

double real_or_throw(Complex value, const char* what) {
    if (std::abs(value.imag()) > 1e-10) {
        throw std::runtime_error(std::string(what) +
                                 ": residual imaginary part " +
                                 std::to_string(value.imag()));
    }
    return value.real();
}

void require_matching_width(int state_n, const PauliSum& obs) {
    if (obs.n_qubits() != state_n) {
        throw std::invalid_argument(
            "observable acts on " + std::to_string(obs.n_qubits()) +
            " qubits but the state has " + std::to_string(state_n));
    }
}

}  // namespace

StateVector StateVector::zero_state(int n) {
    if (n < 1 || n > 24) {
        throw std::invalid_argument("qubit count out of range: " +
                                    std::to_string(n));
    }
    StateVector psi;
    psi.n = n;
    psi.amp = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
    psi.amp[0] = 1.0;
    return psi;
}

void StateVector::check() const {
    if (n < 1 || amp.size() != (Eigen::Index(1) << n)) {
        throw std::invalid_argument("statevector size is not 2^n");
    }
    if (std::abs(amp.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("statevector is not normalized");
    }
}

void DensityMatrix::check(bool with_psd) const {
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (n < 1 || rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("density matrix size is not 2^n x 2^n");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
        std::abs(rho.trace().imag()) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (with_psd) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                           Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10) {
            throw std::invalid_argument("density matrix has negative modes");
        }
    }
}

void NoiseModel::validate() const {
    if (!std::isfinite(t2_star) || t2_star <= 0.0) {
        throw std::invalid_argument("t2_star must be positive");
    }
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::invalid_argument("tau must be non-negative");
    }
    if (!std::isfinite(jitter_b) || jitter_b < 0.0 ||
        jitter_b >= 0.5 * t2_star) {
        throw std::invalid_argument(
            "jitter_b must satisfy 0 <= jitter_b < t2_star / 2");
    }
}

void apply_gate(StateVector& psi, const Gate& gate) {
    const Eigen::Index dim = psi.amp.size();
    const uint64_t udim = static_cast<uint64_t>(dim);
    switch (gate.kind) {
        case Gate::Kind::X: {
            const uint64_t mask = uint64_t(1) << gate.q;
            for (uint64_t b = 0; b < udim; ++b) {
                if ((b & mask) == 0) {
                    std::swap(psi.amp[static_cast<Eigen::Index>(b)],
                              psi.amp[static_cast<Eigen::Index>(b | mask)]);
                }
            }
            break;
        }
        case Gate::Kind::RZ: {
            const Complex lo = std::exp(Complex(0.0, -0.5 * gate.angle));
            const Complex hi = std::exp(Complex(0.0, 0.5 * gate.angle));
            const uint64_t mask = uint64_t(1) << gate.q;
            for (uint64_t b = 0; b < udim; ++b) {
                psi.amp[static_cast<Eigen::Index>(b)] *=
                    (b & mask) ? hi : lo;
            }
            break;
        }
        case Gate::Kind::RYXXY: {
            // Rotates the single-excitation pair |01> <-> |10> on qubits
            // (q, q+1); |00> and |11> are untouched.
            const double c = std::cos(gate.angle);
            const double s = std::sin(gate.angle);
            const uint64_t pair = uint64_t(3) << gate.q;
            for (uint64_t b = 0; b < udim; ++b) {
                if (((b >> gate.q) & 3) == 2) {
                    const auto ia = static_cast<Eigen::Index>(b);
                    const auto ib = static_cast<Eigen::Index>(b ^ pair);
                    const Complex a_hi = psi.amp[ia];
                    const Complex a_lo = psi.amp[ib];
                    psi.amp[ia] = c * a_hi + s * a_lo;
                    psi.amp[ib] = -s * a_hi + c * a_lo;
                }
            }
            break;
        }
    }
}

StateVector apply_circuit(const GaussianCircuit& circuit) {
    circuit.validate();
    StateVector psi = StateVector::zero_state(circuit.n_qubits);
    for (const Gate& gate : circuit.gates) {
        apply_gate(psi, gate);
    }
    return psi;
}

double expectation(const PauliSum& obs, const StateVector& psi) {
    psi.check();
    require_matching_width(psi.n, obs);
    if (!obs.is_hermitian()) {
        throw NonHermitianObservable("expectation of a non-Hermitian sum");
    }
    Complex acc = 0.0;
    for (const PauliSum::Term& term : obs.terms()) {
        acc += term.coeff * product_term_braket(psi.amp, term.x, term.z);
    }
    return real_or_throw(acc, "expectation");
}

DensityMatrix to_density(const StateVector& psi) {
    psi.check();
    DensityMatrix out;
    out.n = psi.n;
    out.rho = psi.amp * psi.amp.adjoint();
    return out;
}

DensityMatrix dephase(const DensityMatrix& rho, const NoiseModel& noise) {
    rho.check();
    noise.validate();
    std::mt19937_64 rng(noise.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double t2_eff = noise.t2_star + unit(rng) * noise.jitter_b;
    const double factor = std::exp(-noise.tau / t2_eff);
    DensityMatrix out;
    out.n = rho.n;
    out.rho = rho.rho;
    const Eigen::Index dim = out.rho.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (i != j) {
                out.rho(i, j) *= factor;
            }
        }
    }
    return out;
}

double noisy_expectation(const DensityMatrix& rho, const PauliSum& obs) {
    rho.check();
    require_matching_width(rho.n, obs);
    if (!obs.is_hermitian()) {
        throw NonHermitianObservable(
            "noisy expectation of a non-Hermitian sum");
    }
    Complex acc = 0.0;
    const auto dim = static_cast<uint64_t>(rho.rho.rows());
    for (const PauliSum::Term& term : obs.terms()) {
        Complex braket = 0.0;
        for (uint64_t b = 0; b < dim; ++b) {
            const double sign =
                (__builtin_popcountll(term.z & b) & 1) ? -1.0 : 1.0;
            braket += sign * rho.rho(static_cast<Eigen::Index>(b),
                                     static_cast<Eigen::Index>(b ^ term.x));
        }
        acc += term.coeff * braket;
    }
    return real_or_throw(acc, "noisy_expectation");
}

SampledExpectation sample_expectation(const StateVector& psi,
                                      const PauliSum& obs, long shots,
                                      std::uint64_t seed) {
    psi.check();
    require_matching_width(psi.n, obs);
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (!obs.is_hermitian()) {
        throw NonHermitianObservable("sampling a non-Hermitian sum");
    }
    std::mt19937_64 rng(seed);
    SampledExpectation out;
    double variance = 0.0;
    for (const PauliSum::Term& term : obs.terms()) {
        // Weight of the Hermitian I/X/Y/Z string for this term; real once
        // the sum passed the Hermiticity check.
        const int phase = __builtin_popcountll(term.x & term.z);
        const double weight = (term.coeff * i_power(-phase)).real();
        if (term.x == 0 && term.z == 0) {
            out.estimate += weight;
            continue;
        }
        const Complex braket = product_term_braket(psi.amp, term.x, term.z);
        const double mean =
            real_or_throw(i_power(phase) * braket, "sample_expectation");
        const double p = std::clamp(0.5 * (1.0 + mean), 0.0, 1.0);
        std::binomial_distribution<long> flips(shots, p);
        const long k = flips(rng);
        const double est = 2.0 * static_cast<double>(k) / shots - 1.0;
        const double se =
            std::sqrt(std::max(0.0, (1.0 - est * est) / shots));
        out.estimate += weight * est;
        variance += weight * weight * se * se;
    }
    out.std_error = std::sqrt(variance);
    return out;
}

double circuit_duration(int gate_count, double per_gate) {
    if (gate_count < 0 || !std::isfinite(per_gate) || per_gate < 0.0) {
        throw std::invalid_argument("invalid circuit duration parameters");
    }
    return gate_count * per_gate;
}

}  // namespace kitaev
