#include "kitaev/exact.hpp"

#include <string>

#include "kitaev/errors.hpp"

namespace kitaev {

Eigen::MatrixXcd pauli_matrix(const PauliSum& op, int cap) {
    const int n = op.n_qubits();
    if (n > cap)
        throw DimensionCapExceeded("pauli_matrix: " + std::to_string(n) +
                                   " qubits exceeds cap of " +
                                   std::to_string(cap));
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : op.terms()) {
        for (std::size_t b = 0; b < dim; ++b) {
            const double sign =
                (__builtin_popcountll(t.z & b) & 1) ? -1.0 : 1.0;
            m(b ^ t.x, b) += t.coeff * sign;
        }
    }
    return m;
}

ExactSpectrum exact_diagonalize(const PauliSum& h, int cap) {
    if (h.n_qubits() > cap)
        throw DimensionCapExceeded("exact_diagonalize: " +
                                   std::to_string(h.n_qubits()) +
                                   " qubits exceeds cap of " +
                                   std::to_string(cap));
    if (!h.is_hermitian())
        throw NonHermitianObservable(
            "exact_diagonalize: operator is not Hermitian");
    Eigen::MatrixXcd m = pauli_matrix(h, cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("exact_diagonalize: eigensolver failed");
    return ExactSpectrum{es.eigenvalues(), es.eigenvectors()};
}

}  // namespace kitaev
