#include "kitaev/topology.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kitaev/errors.hpp"

namespace kitaev {

Eigen::VectorXd bdg_spectrum(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd pair = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        h(k, k) = spec.mu[static_cast<size_t>(k)];
    }
    for (int k = 0; k + 1 < n; ++k) {
        h(k, k + 1) = -spec.t[static_cast<size_t>(k)];
        h(k + 1, k) = -spec.t[static_cast<size_t>(k)];
        pair(k, k + 1) = spec.delta[static_cast<size_t>(k)];
        pair(k + 1, k) = -spec.delta[static_cast<size_t>(k)];
    }
    Eigen::MatrixXd bdg(2 * n, 2 * n);
    bdg.topLeftCorner(n, n) = h;
    bdg.topRightCorner(n, n) = pair;
    bdg.bottomLeftCorner(n, n) = -pair;
    bdg.bottomRightCorner(n, n) = -h.transpose();
    bdg *= 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(bdg,
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ParitySwitches parity_switch_mu(double t, double delta, int n) {
    if (n < 2) {
        throw std::invalid_argument("parity switches need n >= 2");
    }
    if (!std::isfinite(t) || !std::isfinite(delta)) {
        throw std::invalid_argument("non-finite chain parameters");
    }
    ParitySwitches out;
    const double disc = t * t - delta * delta;
    if (disc < 0.0) {
        out.imaginary_root = true;
        return out;
    }
    const double root = 2.0 * std::sqrt(disc);
    for (int p = 1; p <= n / 2; ++p) {
        const double mu = root * std::cos(std::numbers::pi * p / (n + 1));
        const bool dup =
            std::any_of(out.mu_values.begin(), out.mu_values.end(),
                        [mu](double v) { return std::abs(v - mu) < 1e-12; });
        if (!dup) {
            out.mu_values.push_back(mu);
        }
    }
    std::sort(out.mu_values.begin(), out.mu_values.end());
    return out;
}

double critical_mu(int n, double t) {
    if (n < 2) {
        throw std::invalid_argument("critical mu needs n >= 2");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("non-finite hopping");
    }
    return 2.0 * std::abs(t) * (1.0 - 1.0 / n);
}

void WindingConfig::validate() const {
    if (k_samples < 101 || k_samples % 2 == 0) {
        throw std::invalid_argument("k_samples must be odd and >= 101");
    }
}

int winding_number(double mu, double t, double delta, int n,
                   const WindingConfig& cfg) {
    cfg.validate();
    if (n < 2) {
        throw std::invalid_argument("winding number needs n >= 2");
    }
    if (!std::isfinite(mu) || !std::isfinite(t) || !std::isfinite(delta)) {
        throw std::invalid_argument("non-finite chain parameters");
    }
    const double t_eff = t * (1.0 - 1.0 / n);
    const double d_eff = delta * (1.0 - 1.0 / n);
    const int m = cfg.k_samples;
    std::vector<std::complex<double>> z(static_cast<size_t>(m));
    double max_abs = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        const double k =
            -std::numbers::pi + 2.0 * std::numbers::pi * i / (m - 1);
        z[static_cast<size_t>(i)] = {2.0 * d_eff * std::sin(k),
                                     mu + 2.0 * t_eff * std::cos(k)};
        max_abs = std::max(max_abs, std::abs(z[static_cast<size_t>(i)]));
        min_abs = std::min(min_abs, std::abs(z[static_cast<size_t>(i)]));
    }
    const double scale = std::max(1.0, max_abs);
    if (min_abs <= 1e-9 * scale) {
        throw BoundaryPoint("phase vector reaches the origin");
    }
    // delta~ = 0 pins w(K) to the imaginary axis; a sign change of the
    // imaginary part then means the continuous path must cross the origin
    // between grid points even if no sample lands on it.
    double max_re = 0.0;
    bool im_pos = false;
    bool im_neg = false;
    for (const auto& v : z) {
        max_re = std::max(max_re, std::abs(v.real()));
        im_pos = im_pos || v.imag() > 0.0;
        im_neg = im_neg || v.imag() < 0.0;
    }
    if (max_re <= 1e-12 * scale && im_pos && im_neg) {
        throw BoundaryPoint("phase vector confined to a line through 0");
    }
    double total = 0.0;
    for (int i = 1; i < m; ++i) {
        double step = std::arg(z[static_cast<size_t>(i)]) -
                      std::arg(z[static_cast<size_t>(i - 1)]);
        while (step > std::numbers::pi) step -= 2.0 * std::numbers::pi;
        while (step < -std::numbers::pi) step += 2.0 * std::numbers::pi;
        total += step;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace kitaev
