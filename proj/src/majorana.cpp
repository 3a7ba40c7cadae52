#include "kitaev/majorana.hpp"

#include <stdexcept>

#include "kitaev/errors.hpp"

namespace kitaev {

MajoranaQuadratic majorana_quadratic(const FermionOperator& op, int n) {
    if (n < 0) n = op.min_sites();
    if (n < op.min_sites())
        throw std::invalid_argument("majorana_quadratic: n too small");
    using Complex = std::complex<double>;
    const Complex I(0.0, 1.0);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    Complex scalar = 0.0;
    for (const auto& [mono, c] : op.terms()) {
        if (mono.empty()) {
            scalar += c;
            continue;
        }
        if (mono.size() != 2)
            throw NonQuadraticTerm(
                "majorana_quadratic: operator has a non-quadratic term");
        const int j = mono[0].site;
        const int k = mono[1].site;
        const double s1 = mono[0].dag ? 1.0 : -1.0;
        const double s2 = mono[1].dag ? 1.0 : -1.0;
        // (gA_j + i s1 gB_j)(gA_k + i s2 gB_k) / 4
        M(j, k) += c * 0.25;
        M(j, n + k) += c * I * s2 * 0.25;
        M(n + j, k) += c * I * s1 * 0.25;
        M(n + j, n + k) += -c * s1 * s2 * 0.25;
    }
    // f_p^2 = 1 folds the diagonal into the scalar; the symmetric part of the
    // off-diagonal cancels by anticommutation, so only K = (M - M^T)/2
    // survives and H = sum K_pq f_p f_q + c0 = (i/2) f^T A f + c0 with
    // A = -2iK.
    scalar += M.diagonal().sum();
    Eigen::MatrixXcd K = 0.5 * (M - M.transpose());
    Eigen::MatrixXcd Ac = Complex(0.0, -2.0) * K;
    const double scale = std::max(1.0, Ac.cwiseAbs().maxCoeff());
    if (Ac.imag().cwiseAbs().maxCoeff() > 1e-10 * scale ||
        std::abs(scalar.imag()) > 1e-10 * std::max(1.0, std::abs(scalar)))
        throw std::invalid_argument(
            "majorana_quadratic: operator is not Hermitian");
    MajoranaQuadratic out;
    out.A = Ac.real();
    out.A = 0.5 * (out.A - out.A.transpose().eval());  // exact antisymmetry
    out.c0 = scalar.real();
    return out;
}

}  // namespace kitaev
