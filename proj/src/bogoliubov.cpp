#include "kitaev/bogoliubov.hpp"

#include <cmath>
#include <stdexcept>

namespace kitaev {

Eigen::MatrixXcd omega(int n) {
    if (n < 0) throw std::invalid_argument("omega: negative size");
    const std::complex<double> I(0.0, 1.0);
    Eigen::MatrixXcd om = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    const double r = 1.0 / std::sqrt(2.0);
    om.topLeftCorner(n, n) = r * Eigen::MatrixXcd::Identity(n, n);
    om.topRightCorner(n, n) = r * Eigen::MatrixXcd::Identity(n, n);
    om.bottomLeftCorner(n, n) = I * r * Eigen::MatrixXcd::Identity(n, n);
    om.bottomRightCorner(n, n) = -I * r * Eigen::MatrixXcd::Identity(n, n);
    return om;
}

BogoliubovW bogoliubov_w(const SchurForm& schur) {
    const Eigen::Index m = schur.R.rows();
    if (m % 2 != 0 || schur.R.cols() != m)
        throw std::invalid_argument("bogoliubov_w: malformed Schur form");
    const int n = static_cast<int>(m / 2);
    const Eigen::MatrixXcd om = omega(n);
    BogoliubovW out;
    out.n = n;
    out.W = om.adjoint() * schur.R * om;
    const double unit_err =
        (out.W * out.W.adjoint() - Eigen::MatrixXcd::Identity(m, m))
            .cwiseAbs()
            .maxCoeff();
    if (unit_err > 1e-10)
        throw std::runtime_error("bogoliubov_w: W not unitary");
    const double block_err = std::max(
        (out.W.topLeftCorner(n, n) - out.W.bottomRightCorner(n, n).conjugate())
            .cwiseAbs()
            .maxCoeff(),
        (out.W.topRightCorner(n, n) - out.W.bottomLeftCorner(n, n).conjugate())
            .cwiseAbs()
            .maxCoeff());
    if (block_err > 1e-10)
        throw std::runtime_error("bogoliubov_w: block structure violated");
    out.W.bottomLeftCorner(n, n) = out.W.topRightCorner(n, n).conjugate();
    out.W.bottomRightCorner(n, n) = out.W.topLeftCorner(n, n).conjugate();
    return out;
}

}  // namespace kitaev
