#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "kitaev/compiler.hpp"
#include "kitaev/errors.hpp"
#include "kitaev/experiments.hpp"
#include "kitaev/observables.hpp"
#include "kitaev/simulator.hpp"
#include "oracles.hpp"

using namespace kitaev;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

GaussianCircuit random_circuit(std::mt19937_64& rng, int n, int depth) {
    std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
    std::uniform_int_distribution<int> site(0, n - 1);
    std::uniform_int_distribution<int> pair(0, n > 1 ? n - 2 : 0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    GaussianCircuit c;
    c.n_qubits = n;
    for (int i = 0; i < depth; ++i) {
        switch (kind(rng)) {
            case 0:
                c.gates.push_back(Gate::x(site(rng)));
                break;
            case 1:
                c.gates.push_back(Gate::rz(site(rng), angle(rng)));
                break;
            default:
                c.gates.push_back(Gate::ryxxy(pair(rng), angle(rng)));
                break;
        }
    }
    return c;
}

StateVector plus_state() {
    StateVector psi;
    psi.n = 1;
    psi.amp = Eigen::VectorXcd::Constant(2, Complex(1.0 / std::sqrt(2.0), 0));
    return psi;
}

}  // namespace

TEST_CASE("gate kernels match dense matrix simulation") {
    std::mt19937_64 rng(11);
    for (const int n : {1, 2, 3, 4}) {
        for (int rep = 0; rep < 5; ++rep) {
            const GaussianCircuit c =
                random_circuit(rng, n, 12 + 4 * rep);
            const StateVector psi = apply_circuit(c);
            const Eigen::VectorXcd dense = oracle::simulate_dense(c);
            CHECK((psi.amp - dense).cwiseAbs().maxCoeff() < 1e-12);
            psi.check();
        }
    }
}

TEST_CASE("apply_circuit basics") {
    GaussianCircuit empty;
    empty.n_qubits = 3;
    const StateVector vac = apply_circuit(empty);
    CHECK(vac.amp(0) == Complex(1.0, 0.0));
    CHECK(vac.amp.tail(7).cwiseAbs().maxCoeff() == 0.0);

    GaussianCircuit flip;
    flip.n_qubits = 1;
    flip.gates.push_back(Gate::x(0));
    const StateVector one = apply_circuit(flip);
    CHECK(one.amp(1) == Complex(1.0, 0.0));
    CHECK(one.amp(0) == Complex(0.0, 0.0));

    const ChainSpec spec(3, 1e-8, -1.0, 1.0);
    const StateVector ground = apply_circuit(compile_eigenstate(spec, {}));
    CHECK(std::abs(expectation(hamiltonian_op(spec), ground) - (-2.0)) <
          1e-6);

    GaussianCircuit bad;
    bad.n_qubits = 2;
    bad.gates.push_back(Gate::ryxxy(1, 0.3));
    CHECK_THROWS_AS(apply_circuit(bad), std::invalid_argument);
}

TEST_CASE("expectation values") {
    const ChainSpec spec(3, 1e-8, -1.0, 1.0);
    const StateVector odd = apply_circuit(compile_eigenstate(spec, {0}));
    CHECK(expectation(parity_op(3), odd) == doctest::Approx(-1.0).epsilon(1e-9));

    const StateVector plus = plus_state();
    CHECK(std::abs(expectation(PauliSum::from_label("X"), plus) - 1.0) <
          1e-12);
    CHECK(std::abs(expectation(PauliSum::from_label("Z"), plus)) < 1e-12);

    CHECK_THROWS_AS(expectation(PauliSum::from_label("X", Complex(0, 1)),
                                plus),
                    NonHermitianObservable);
    CHECK_THROWS_AS(expectation(PauliSum::from_label("XX"), plus),
                    std::invalid_argument);
}

TEST_CASE("to_density produces the pure projector") {
    std::mt19937_64 rng(13);
    const GaussianCircuit c = random_circuit(rng, 3, 20);
    const StateVector psi = apply_circuit(c);
    const DensityMatrix rho = to_density(psi);
    rho.check(true);
    CHECK((rho.rho - rho.rho * rho.rho).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(noisy_expectation(rho, parity_op(3)) -
                   expectation(parity_op(3), psi)) < 1e-12);
    CHECK(std::abs(noisy_expectation(rho, number_op(3)) -
                   expectation(number_op(3), psi)) < 1e-12);
}

TEST_CASE("dephasing channel") {
    std::mt19937_64 rng(17);
    const GaussianCircuit c = random_circuit(rng, 3, 24);
    const DensityMatrix rho = to_density(apply_circuit(c));

    NoiseModel off;
    off.t2_star = 1.0;
    off.tau = 0.0;
    const DensityMatrix same = dephase(rho, off);
    CHECK((same.rho - rho.rho).cwiseAbs().maxCoeff() == 0.0);

    NoiseModel unit;
    unit.t2_star = 1.0;
    unit.tau = 1.0;
    const DensityMatrix damped = dephase(rho, unit);
    const double scale = std::exp(-1.0);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i == j) {
                CHECK(damped.rho(i, j) == rho.rho(i, j));
            } else {
                CHECK(std::abs(damped.rho(i, j) - scale * rho.rho(i, j)) <
                      1e-15);
            }
        }
    }
    damped.check(true);

    // Two applications compose additively in tau.
    NoiseModel a = unit;
    a.tau = 0.35;
    NoiseModel b = unit;
    b.tau = 0.85;
    NoiseModel ab = unit;
    ab.tau = 1.20;
    const DensityMatrix two = dephase(dephase(rho, a), b);
    const DensityMatrix one = dephase(rho, ab);
    CHECK((two.rho - one.rho).cwiseAbs().maxCoeff() < 1e-12);

    // The infinite-time limit is the diagonal ensemble.
    NoiseModel late;
    late.t2_star = 1.0;
    late.tau = 1e6;
    const DensityMatrix diag = dephase(rho, late);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i != j) CHECK(std::abs(diag.rho(i, j)) < 1e-200);
        }
    }
    CHECK((diag.rho.diagonal() - rho.rho.diagonal()).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("dephasing jitter determinism and bounds") {
    std::mt19937_64 rng(19);
    const DensityMatrix rho = to_density(apply_circuit(random_circuit(rng, 2, 16)));

    NoiseModel noisy;
    noisy.t2_star = 1.0;
    noisy.tau = 0.7;
    noisy.jitter_b = 0.3;
    noisy.seed = 42;
    const DensityMatrix r1 = dephase(rho, noisy);
    const DensityMatrix r2 = dephase(rho, noisy);
    CHECK((r1.rho - r2.rho).cwiseAbs().maxCoeff() == 0.0);

    // The realized scale lies between the extreme jitter draws, and the
    // whole matrix is damped by one shared factor.
    Complex ref(0, 0);
    double realized = 0.0;
    for (int i = 0; i < 4 && realized == 0.0; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j && std::abs(rho.rho(i, j)) > 1e-6) {
                ref = r1.rho(i, j) / rho.rho(i, j);
                realized = std::abs(ref);
                break;
            }
        }
    }
    REQUIRE(realized > 0.0);
    CHECK(std::abs(ref.imag()) < 1e-15);
    CHECK(realized >= std::exp(-noisy.tau / (noisy.t2_star - noisy.jitter_b)) -
                          1e-12);
    CHECK(realized <= std::exp(-noisy.tau / (noisy.t2_star + noisy.jitter_b)) +
                          1e-12);

    NoiseModel other = noisy;
    other.seed = 43;
    const DensityMatrix r3 = dephase(rho, other);
    CHECK((r3.rho - r1.rho).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("noise model validation") {
    NoiseModel m;
    CHECK_NOTHROW(m.validate());
    m.t2_star = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.t2_star = 1.0;
    m.tau = -0.1;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.tau = 0.0;
    m.jitter_b = 0.5;  // not strictly below t2_star / 2
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.jitter_b = -0.1;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.jitter_b = 0.49;
    CHECK_NOTHROW(m.validate());
}

TEST_CASE("sampled expectation statistics") {
    StateVector zero = StateVector::zero_state(1);
    const SampledExpectation det =
        sample_expectation(zero, PauliSum::from_label("Z"), 4096, 7);
    CHECK(det.estimate == 1.0);
    CHECK(det.std_error == 0.0);

    // Identity terms contribute exactly, without sampling noise.
    const PauliSum shifted =
        PauliSum::from_label("Z", 0.5) + PauliSum::identity(1, 2.0);
    const SampledExpectation shift = sample_expectation(zero, shifted, 64, 7);
    CHECK(shift.estimate == doctest::Approx(2.5).epsilon(1e-15));

    const StateVector plus = plus_state();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SampledExpectation s =
            sample_expectation(plus, PauliSum::from_label("Z"), 8192, seed);
        CHECK(std::abs(s.estimate) < 6.0 / std::sqrt(8192.0));
        CHECK(s.std_error > 0.0);
        CHECK(s.std_error < 2.0 / std::sqrt(8192.0));
    }

    const SampledExpectation s1 =
        sample_expectation(plus, PauliSum::from_label("Z"), 2048, 99);
    const SampledExpectation s2 =
        sample_expectation(plus, PauliSum::from_label("Z"), 2048, 99);
    CHECK(s1.estimate == s2.estimate);
    CHECK(s1.std_error == s2.std_error);

    CHECK_THROWS_AS(sample_expectation(plus, PauliSum::from_label("Z"), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("sampled energies bracket the exact value") {
    const ChainSpec spec(3, 0.7, -1.0, 1.0);
    const StateVector psi = apply_circuit(compile_eigenstate(spec, {}));
    const PauliSum h = hamiltonian_op(spec);
    const double exact = expectation(h, psi);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SampledExpectation s = sample_expectation(psi, h, 8192, seed);
        CHECK(std::abs(s.estimate - exact) <= 5.0 * s.std_error + 1e-12);
    }
}

TEST_CASE("state and density validation") {
    CHECK_THROWS_AS(StateVector::zero_state(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::zero_state(25), std::invalid_argument);

    StateVector bad = StateVector::zero_state(2);
    bad.amp(0) = 2.0;
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad.amp = Eigen::VectorXcd::Zero(3);
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);

    DensityMatrix rho;
    rho.n = 1;
    rho.rho = Eigen::MatrixXcd::Zero(2, 2);
    rho.rho(0, 0) = 0.5;
    rho.rho(1, 1) = 0.5;
    CHECK_NOTHROW(rho.check(true));
    rho.rho(0, 1) = Complex(0.0, 0.7);
    rho.rho(1, 0) = Complex(0.0, -0.7);
    CHECK_NOTHROW(rho.check());
    CHECK_THROWS_AS(rho.check(true), std::invalid_argument);
    rho.rho(1, 0) = Complex(0.0, 0.7);
    CHECK_THROWS_AS(rho.check(), std::invalid_argument);
}

TEST_CASE("circuit duration") {
    CHECK(circuit_duration(6, 0.5) == 3.0);
    CHECK(circuit_duration(0, 1.0) == 0.0);
    CHECK_THROWS_AS(circuit_duration(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(circuit_duration(4, -0.5), std::invalid_argument);
}
