#include "kitaev/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kitaev/compiler.hpp"
#include "kitaev/errors.hpp"
#include "kitaev/observables.hpp"
#include "kitaev/version.hpp"

namespace kitaev {

namespace {

constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trimmed(const std::string& s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double_strict(const std::string& text) {
    const std::string s = trimmed(text);
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) {
        throw std::invalid_argument("trailing characters in number: " + s);
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (const char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string csv_label_field(const std::vector<int>& label) {
    const std::string text = label_to_string(label);
    if (text.find(',') != std::string::npos) {
        return "\"" + text + "\"";
    }
    return text;
}

void check_grid(const std::vector<double>& grid, double lo) {
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || grid[i] < lo) {
            throw std::invalid_argument(
                "sweep grid must lie within [1e-8, inf)");
        }
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw std::invalid_argument(
                "sweep grid must be strictly increasing");
        }
    }
}

void check_unique_labels(const std::vector<std::vector<int>>& labels) {
    std::set<std::vector<int>> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw std::invalid_argument("duplicate excitation label: " +
                                        label_to_string(label));
        }
    }
}

void emit_csv_row(std::ofstream& out, double coord,
                  const std::vector<int>& label, const std::string& obs,
                  double value, double std_error) {
    out << fmt17(coord) << ',' << csv_label_field(label) << ',' << obs << ','
        << fmt17(value) << ',' << fmt17(std_error) << '\n';
}

}  // namespace

std::vector<double> default_mu_grid() {
    std::vector<double> grid;
    grid.reserve(21);
    grid.push_back(1e-8);
    for (int i = 1; i <= 20; ++i) {
        grid.push_back(0.155 * i);
    }
    return grid;
}

std::vector<std::vector<int>> all_excitation_labels(int n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("label enumeration needs 1 <= n <= 20");
    }
    std::vector<std::vector<int>> labels;
    labels.reserve(size_t(1) << n);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> label;
        for (int j = 0; j < n; ++j) {
            if (mask & (uint32_t(1) << j)) {
                label.push_back(j);
            }
        }
        labels.push_back(std::move(label));
    }
    return labels;
}

std::string label_to_string(const std::vector<int>& label) {
    std::string out = "[";
    for (size_t i = 0; i < label.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(label[i]);
    }
    out += ']';
    return out;
}

std::vector<int> parse_label(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw std::invalid_argument("label must look like [..]: " + text);
    }
    std::vector<int> out;
    const std::string inner = trimmed(s.substr(1, s.size() - 2));
    if (inner.empty()) {
        return out;
    }
    size_t start = 0;
    while (true) {
        const size_t comma = inner.find(',', start);
        const std::string tok =
            trimmed(inner.substr(start, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - start));
        size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (tok.empty() || pos != tok.size()) {
            throw std::invalid_argument("bad label entry: " + text);
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

SweepResult sweep_spectrum(const ChainSpec& spec,
                           const std::vector<double>& grid,
                           const std::vector<std::vector<int>>& labels,
                           const std::optional<NoiseModel>& noise) {
    spec.validate();
    check_grid(grid, 1e-8);
    check_unique_labels(labels);
    if (noise) {
        noise->validate();
    }
    SweepResult result;
    result.spec = spec;
    result.grid = grid;
    result.labels = labels;
    result.has_noise = noise.has_value();
    if (noise) {
        result.noise = *noise;
    }
    result.version = kVersion;
    const int n = spec.n;
    std::uint64_t row_index = 0;
    for (const double mu : grid) {
        const ChainSpec point = spec.with_mu(mu);
        const PauliSum h_op = hamiltonian_op(point);
        for (const auto& label : labels) {
            SweepRow row;
            row.mu = mu;
            row.label = label;
            try {
                const GaussianCircuit circuit =
                    compile_eigenstate(point, label);
                const StateVector psi = apply_circuit(circuit);
                row.energy = expectation(h_op, psi);
                row.parity = expectation(parity_op(n), psi);
                row.number = expectation(number_op(n), psi);
                row.edge_corr = expectation(edge_correlation_op(n), psi);
                row.site_corr.reserve(static_cast<size_t>(2 * n - 1));
                for (int m = 2; m <= 2 * n; ++m) {
                    row.site_corr.push_back(
                        expectation(site_correlation_op(m, n), psi));
                }
                if (noise) {
                    NoiseModel nm = *noise;
                    nm.seed = noise->seed + kSeedStride * row_index;
                    const DensityMatrix rho = dephase(to_density(psi), nm);
                    row.has_noise = true;
                    row.noisy_energy = noisy_expectation(rho, h_op);
                    row.noisy_parity = noisy_expectation(rho, parity_op(n));
                    row.noisy_number = noisy_expectation(rho, number_op(n));
                    row.noisy_edge_corr =
                        noisy_expectation(rho, edge_correlation_op(n));
                }
            } catch (const DegenerateHamiltonian&) {
                row.degenerate = true;
            }
            result.rows.push_back(std::move(row));
            ++row_index;
        }
    }
    return result;
}

ParityScanResult parity_scan(double t, const std::vector<double>& deltas,
                             const std::vector<double>& mu_grid, int n) {
    if (n < 2) {
        throw std::invalid_argument("parity scan needs n >= 2");
    }
    ParityScanResult result;
    result.t = t;
    result.n = n;
    for (const double delta : deltas) {
        result.predictions.emplace_back(delta, parity_switch_mu(t, delta, n));
        for (const double mu : mu_grid) {
            ParityCell cell;
            cell.delta = delta;
            cell.mu = mu;
            try {
                const ChainSpec point(n, mu, t, delta);
                const GaussianCircuit circuit = compile_eigenstate(point, {});
                const StateVector psi = apply_circuit(circuit);
                const double p = expectation(parity_op(n), psi);
                cell.parity = p >= 0.0 ? 1 : -1;
            } catch (const DegenerateHamiltonian&) {
                cell.degenerate = true;
            }
            result.cells.push_back(cell);
        }
    }
    return result;
}

std::vector<CorrelationRow> site_correlation_profile(
    const ChainSpec& spec, const std::vector<std::vector<int>>& labels,
    const std::vector<double>& mu_list) {
    spec.validate();
    check_unique_labels(labels);
    std::vector<CorrelationRow> rows;
    for (const double mu : mu_list) {
        const ChainSpec point = spec.with_mu(mu);
        for (const auto& label : labels) {
            CorrelationRow row;
            row.mu = mu;
            row.label = label;
            try {
                const StateVector psi =
                    apply_circuit(compile_eigenstate(point, label));
                for (int m = 2; m <= 2 * spec.n; ++m) {
                    row.values.push_back(
                        expectation(site_correlation_op(m, spec.n), psi));
                }
            } catch (const DegenerateHamiltonian&) {
                row.degenerate = true;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

EdgeFit fit_quadratic(const std::vector<double>& mu,
                      const std::vector<double>& value) {
    if (mu.size() != value.size()) {
        throw std::invalid_argument("fit inputs differ in length");
    }
    if (mu.size() < 4) {
        throw std::invalid_argument("fit needs at least 4 data points");
    }
    const auto m = static_cast<Eigen::Index>(mu.size());
    Eigen::MatrixXd a(m, 3);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double x = mu[static_cast<size_t>(i)];
        a(i, 0) = 1.0;
        a(i, 1) = x;
        a(i, 2) = x * x;
        b(i) = value[static_cast<size_t>(i)];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < 3) {
        throw std::invalid_argument("rank-deficient grid for quadratic fit");
    }
    const Eigen::Vector3d c = qr.solve(b);
    EdgeFit fit;
    fit.c0 = c(0);
    fit.c1 = c(1);
    fit.c2 = c(2);
    fit.residual = (a * c - b).norm();
    return fit;
}

EdgeFit fit_edge_decay(const SweepResult& sweep,
                       const std::vector<int>& label) {
    std::vector<double> mu;
    std::vector<double> value;
    for (const SweepRow& row : sweep.rows) {
        if (!row.degenerate && row.label == label) {
            mu.push_back(row.mu);
            value.push_back(std::abs(row.edge_corr));
        }
    }
    return fit_quadratic(mu, value);
}

double mean_absolute_error(const std::vector<double>& x,
                           const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("length mismatch");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("need at least 2 points");
    }
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        acc += std::abs(x[i] - y[i]);
    }
    return acc / static_cast<double>(x.size());
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("length mismatch");
    }
    const auto m = static_cast<double>(x.size());
    if (x.size() < 3) {
        throw std::invalid_argument("need at least 3 points");
    }
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
    double var_y = 0.0;
    double cov = 0.0;
    double var_x = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        var_y += (y[i] - my) * (y[i] - my);
        var_x += (x[i] - mx) * (x[i] - mx);
        cov += (y[i] - my) * (x[i] - mx);
    }
    if (var_y <= 0.0) {
        throw std::invalid_argument("zero variance in predictions");
    }
    const double slope = cov / var_y;
    const double intercept = mx - slope * my;
    double ss_res = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double r = x[i] - (intercept + slope * y[i]);
        ss_res += r * r;
    }
    if (var_x <= 0.0) {
        return ss_res <= 0.0 ? 1.0 : 0.0;
    }
    return 1.0 - ss_res / var_x;
}

std::vector<MeasurementRow> load_measurement_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::vector<MeasurementRow> rows;
    std::string line;
    size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trimmed(line).empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (!saw_header) {
            if (fields.size() < 4 || trimmed(fields[0]) != "mu" ||
                trimmed(fields[1]) != "label" ||
                trimmed(fields[2]) != "observable" ||
                trimmed(fields[3]) != "value") {
                throw std::runtime_error(
                    path + ":" + std::to_string(line_no) +
                    ": expected header mu,label,observable,value[,stderr]");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 4 && fields.size() != 5) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 4 or 5 fields, got " +
                                     std::to_string(fields.size()));
        }
        MeasurementRow row;
        try {
            row.mu = parse_double_strict(fields[0]);
            row.label = parse_label(fields[1]);
            row.observable = trimmed(fields[2]);
            row.value = parse_double_strict(fields[3]);
            if (fields.size() == 5 && !trimmed(fields[4]).empty()) {
                row.std_error = parse_double_strict(fields[4]);
                row.has_std_error = true;
            }
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed row: " + e.what());
        }
        if (row.observable.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": empty observable name");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComparisonResult compare_tables(const std::vector<MeasurementRow>& predicted,
                                const std::vector<MeasurementRow>& measured) {
    std::map<std::string, double> lookup;
    for (const MeasurementRow& row : predicted) {
        lookup[fmt17(row.mu) + "|" + label_to_string(row.label) + "|" +
               row.observable] = row.value;
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const MeasurementRow& row : measured) {
        const auto it = lookup.find(fmt17(row.mu) + "|" +
                                    label_to_string(row.label) + "|" +
                                    row.observable);
        if (it != lookup.end()) {
            x.push_back(row.value);
            y.push_back(it->second);
        }
    }
    if (x.size() < 2) {
        throw std::invalid_argument("tables share fewer than 2 rows");
    }
    ComparisonResult out;
    out.pairs = x.size();
    out.me = mean_absolute_error(x, y);
    out.r2 = x.size() >= 3 ? r_squared(x, y)
                           : std::numeric_limits<double>::quiet_NaN();
    return out;
}

NoiseSweepResult noise_sweep(const ChainSpec& spec,
                             const std::vector<std::vector<int>>& labels,
                             const std::vector<double>& tau_ratios,
                             double jitter_b, double t2_star,
                             std::uint64_t seed) {
    spec.validate();
    check_unique_labels(labels);
    for (const double r : tau_ratios) {
        if (!std::isfinite(r) || r < 0.0) {
            throw std::invalid_argument("tau ratios must be >= 0");
        }
    }
    NoiseSweepResult result;
    result.spec = spec;
    result.t2_star = t2_star;
    result.jitter_b = jitter_b;
    result.seed = seed;
    result.version = kVersion;
    const PauliSum h_op = hamiltonian_op(spec);
    struct Prepared {
        bool degenerate = false;
        DensityMatrix rho;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(labels.size());
    for (const auto& label : labels) {
        Prepared p;
        try {
            p.rho = to_density(apply_circuit(compile_eigenstate(spec, label)));
        } catch (const DegenerateHamiltonian&) {
            p.degenerate = true;
        }
        prepared.push_back(std::move(p));
    }
    std::uint64_t row_index = 0;
    for (const double ratio : tau_ratios) {
        for (size_t li = 0; li < labels.size(); ++li) {
            NoiseRow row;
            row.tau_over_t2 = ratio;
            row.label = labels[li];
            if (prepared[li].degenerate) {
                row.degenerate = true;
            } else {
                NoiseModel nm;
                nm.t2_star = t2_star;
                nm.tau = ratio * t2_star;
                nm.jitter_b = jitter_b;
                nm.seed = seed + kSeedStride * row_index;
                const DensityMatrix rho = dephase(prepared[li].rho, nm);
                row.noisy_energy = noisy_expectation(rho, h_op);
            }
            result.rows.push_back(std::move(row));
            ++row_index;
        }
    }
    return result;
}

std::vector<MeasurementRow> sweep_table(const SweepResult& result) {
    std::vector<MeasurementRow> rows;
    auto push = [&rows](double mu, const std::vector<int>& label,
                        const std::string& obs, double value) {
        MeasurementRow row;
        row.mu = mu;
        row.label = label;
        row.observable = obs;
        row.value = value;
        row.std_error = 0.0;
        row.has_std_error = true;
        rows.push_back(std::move(row));
    };
    for (const SweepRow& row : result.rows) {
        if (row.degenerate) {
            continue;
        }
        push(row.mu, row.label, "energy", row.energy);
        push(row.mu, row.label, "parity", row.parity);
        push(row.mu, row.label, "number", row.number);
        push(row.mu, row.label, "edge_corr", row.edge_corr);
        for (size_t i = 0; i < row.site_corr.size(); ++i) {
            push(row.mu, row.label, "site_corr_" + std::to_string(i + 2),
                 row.site_corr[i]);
        }
        if (row.has_noise) {
            push(row.mu, row.label, "noisy_energy", row.noisy_energy);
            push(row.mu, row.label, "noisy_parity", row.noisy_parity);
            push(row.mu, row.label, "noisy_number", row.noisy_number);
            push(row.mu, row.label, "noisy_edge_corr", row.noisy_edge_corr);
        }
    }
    return rows;
}

void write_measurement_csv(const std::vector<MeasurementRow>& rows,
                           const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "mu,label,observable,value,stderr\n";
    for (const MeasurementRow& row : rows) {
        emit_csv_row(out, row.mu, row.label, row.observable, row.value,
                     row.std_error);
    }
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    write_measurement_csv(sweep_table(result), path);
}

void write_noise_csv(const NoiseSweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "mu,label,observable,value,stderr\n";
    for (const NoiseRow& row : result.rows) {
        if (row.degenerate) {
            continue;
        }
        emit_csv_row(out, row.tau_over_t2, row.label, "noisy_energy",
                     row.noisy_energy, 0.0);
    }
}

std::string experiment_filename(const std::string& experiment,
                                const ChainSpec& spec) {
    char t_buf[32];
    char d_buf[32];
    std::snprintf(t_buf, sizeof t_buf, "%g",
                  spec.t.empty() ? 0.0 : spec.t.front());
    std::snprintf(d_buf, sizeof d_buf, "%g",
                  spec.delta.empty() ? 0.0 : spec.delta.front());
    return experiment + "_" + std::to_string(spec.n) + "_" + t_buf + "_" +
           d_buf + ".csv";
}

}  // namespace kitaev
