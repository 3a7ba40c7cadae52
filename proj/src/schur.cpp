#include "kitaev/schur.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kitaev {

namespace {

void check_antisymmetric(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("schur_antisymmetric: matrix not square");
    if (A.rows() % 2 != 0)
        throw std::invalid_argument("schur_antisymmetric: odd dimension");
    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("schur_antisymmetric: not antisymmetric");
}

// A with vanishing diagonal blocks reduces to the SVD of its coupling block:
// for A = [[0, D], [-D^T, 0]] and D = X S Y^T, the pairs u = (x, 0),
// w = (0, -y) satisfy A u = s w and A w = -s u, so they are canonical and
// never mix the two halves (which downstream consumers rely on to obtain a
// real Bogoliubov W).
SchurForm schur_blocked(const Eigen::MatrixXd& A) {
    const Eigen::Index n = A.rows() / 2;
    const Eigen::MatrixXd D = A.topRightCorner(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        D, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchurForm out;
    out.R = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    out.eps = Eigen::VectorXd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index k = n - 1 - j;  // ascending singular values
        out.eps(j) = svd.singularValues()(k);
        out.R.row(j).segment(n, n) = -svd.matrixV().col(k);  // w_j
        out.R.row(n + j).segment(0, n) = svd.matrixU().col(k);  // u_j
    }
    return out;
}

SchurForm schur_generic(const Eigen::MatrixXd& A) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = m / 2;
    const std::complex<double> I(0.0, 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(I * A);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("schur_antisymmetric: eigensolver failed");
    const Eigen::VectorXd evals = es.eigenvalues();
    const double tol = 1e-10 * std::max(1.0, evals.cwiseAbs().maxCoeff());
    std::vector<std::pair<double, Eigen::VectorXcd>> pos;
    for (Eigen::Index i = 0; i < m; ++i)
        if (evals(i) > tol) pos.emplace_back(evals(i), es.eigenvectors().col(i));
    const Eigen::Index nzero = n - static_cast<Eigen::Index>(pos.size());
    std::vector<Eigen::VectorXd> us, ws;
    std::vector<double> eps;
    if (nzero > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
        Eigen::MatrixXd null = svd.matrixV().rightCols(2 * nzero);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(null);
        Eigen::MatrixXd q =
            qr.householderQ() * Eigen::MatrixXd::Identity(m, 2 * nzero);
        for (Eigen::Index j = 0; j < nzero; ++j) {
            us.push_back(q.col(2 * j));
            ws.push_back(q.col(2 * j + 1));
            eps.push_back(0.0);
        }
    }
    std::size_t i = 0;
    while (i < pos.size()) {
        std::size_t j = i;
        while (j + 1 < pos.size() &&
               pos[j + 1].first - pos[i].first <
                   1e-9 * std::max(1.0, pos[i].first))
            ++j;
        const Eigen::Index mc = static_cast<Eigen::Index>(j - i + 1);
        double e = 0.0;
        for (std::size_t k = i; k <= j; ++k) e += pos[k].first;
        e /= static_cast<double>(mc);
        Eigen::MatrixXd vr(m, 2 * mc);
        for (Eigen::Index k = 0; k < mc; ++k) {
            const Eigen::VectorXcd& v = pos[i + k].second;
            vr.col(2 * k) = std::sqrt(2.0) * v.real();
            vr.col(2 * k + 1) = std::sqrt(2.0) * v.imag();
        }
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(vr);
        Eigen::MatrixXd B =
            qr.householderQ() * Eigen::MatrixXd::Identity(m, 2 * mc);
        for (Eigen::Index peel = 0; peel < mc; ++peel) {
            Eigen::VectorXd u = B.col(0).normalized();
            Eigen::VectorXd w = A * u / e;
            us.push_back(u);
            ws.push_back(w);
            eps.push_back(e);
            Eigen::MatrixXd P = B - u * (u.transpose() * B).eval() -
                                w * (w.transpose() * B).eval();
            std::vector<Eigen::VectorXd> keep;
            for (Eigen::Index col = 0; col < P.cols(); ++col) {
                Eigen::VectorXd v = P.col(col);
                const double nv = v.norm();
                if (nv > 1e-8) {
                    v /= nv;
                    for (Eigen::Index c2 = col + 1; c2 < P.cols(); ++c2)
                        P.col(c2) -= v * v.dot(P.col(c2));
                    keep.push_back(v);
                }
            }
            B.resize(m, static_cast<Eigen::Index>(keep.size()));
            for (std::size_t k = 0; k < keep.size(); ++k)
                B.col(static_cast<Eigen::Index>(k)) = keep[k];
        }
        i = j + 1;
    }
    SchurForm out;
    out.R = Eigen::MatrixXd::Zero(m, m);
    out.eps = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.R.row(k) = ws[static_cast<std::size_t>(k)];
        out.R.row(n + k) = us[static_cast<std::size_t>(k)];
        out.eps(k) = eps[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace

SchurForm schur_antisymmetric(const Eigen::MatrixXd& A) {
    check_antisymmetric(A);
    const Eigen::Index m = A.rows();
    const Eigen::Index n = m / 2;
    SchurForm out;
    if (m == 0) {
        out.R.resize(0, 0);
        out.eps.resize(0);
        return out;
    }
    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    const double diag_block =
        std::max(A.topLeftCorner(n, n).cwiseAbs().maxCoeff(),
                 A.bottomRightCorner(n, n).cwiseAbs().maxCoeff());
    out = diag_block <= 1e-12 * scale ? schur_blocked(A) : schur_generic(A);
    const Eigen::MatrixXd canon = out.R * A * out.R.transpose();
    Eigen::MatrixXd target = Eigen::MatrixXd::Zero(m, m);
    target.topRightCorner(n, n) = out.eps.asDiagonal();
    target.bottomLeftCorner(n, n) = -Eigen::MatrixXd(out.eps.asDiagonal());
    const double orth_err =
        (out.R * out.R.transpose() - Eigen::MatrixXd::Identity(m, m))
            .cwiseAbs()
            .maxCoeff();
    if (orth_err > 1e-8 || (canon - target).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw std::runtime_error(
            "schur_antisymmetric: canonical form not reached");
    return out;
}

double pfaffian(Eigen::MatrixXd A) {
    const Eigen::Index m = A.rows();
    if (m != A.cols())
        throw std::invalid_argument("pfaffian: matrix not square");
    if (m % 2 == 1) return 0.0;
    if (m == 0) return 1.0;
    double pf = 1.0;
    for (Eigen::Index k = 0; k + 2 < m; k += 2) {
        Eigen::Index piv = 0;
        A.col(k).segment(k + 1, m - k - 1).cwiseAbs().maxCoeff(&piv);
        piv += k + 1;
        if (piv != k + 1) {
            A.row(k + 1).swap(A.row(piv));
            A.col(k + 1).swap(A.col(piv));
            pf = -pf;
        }
        if (A(k + 1, k) == 0.0) return 0.0;
        pf *= A(k, k + 1);
        const double inv = 1.0 / A(k + 1, k);
        for (Eigen::Index i = k + 2; i < m; ++i) {
            const double f = A(i, k) * inv;
            if (f != 0.0) {
                A.row(i) -= f * A.row(k + 1);
                A.col(i) -= f * A.col(k + 1);
            }
        }
    }
    pf *= A(m - 2, m - 1);
    return pf;
}

}  // namespace kitaev
