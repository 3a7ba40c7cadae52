#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kitaev/chain_spec.hpp"
#include "kitaev/simulator.hpp"
#include "kitaev/topology.hpp"

namespace kitaev {

// 21-point chemical-potential grid: 1e-8, then 0.155 steps up to 3.1.
std::vector<double> default_mu_grid();

// All 2^n excitation labels in mask order ([], [0], [1], [0,1], ...).
std::vector<std::vector<int>> all_excitation_labels(int n);

std::string label_to_string(const std::vector<int>& label);
std::vector<int> parse_label(const std::string& text);

struct SweepRow {
    double mu = 0.0;
    std::vector<int> label;
    bool degenerate = false;  // compilation rejected this point; no values
    double energy = 0.0;
    double parity = 0.0;
    double number = 0.0;
    double edge_corr = 0.0;
    std::vector<double> site_corr;  // <i g1 g_m> for m = 2..2n
    bool has_noise = false;
    double noisy_energy = 0.0;
    double noisy_parity = 0.0;
    double noisy_number = 0.0;
    double noisy_edge_corr = 0.0;
};

struct SweepResult {
    ChainSpec spec;  // template; mu is replaced per grid point
    std::vector<double> grid;
    std::vector<std::vector<int>> labels;
    bool has_noise = false;
    NoiseModel noise;  // base model; row seeds derive from noise.seed
    std::string version;
    std::vector<SweepRow> rows;  // one per (mu, label), grid-major
};

// Compiles and measures every (mu, label) cell. The grid must be strictly
// increasing within [1e-8, inf). A degenerate point flags its row instead of
// aborting the sweep. With a noise model attached, each row also records
// dephased expectation values; the model's seed is advanced per row so the
// sweep stays reproducible as a whole.
SweepResult sweep_spectrum(const ChainSpec& spec,
                           const std::vector<double>& grid,
                           const std::vector<std::vector<int>>& labels,
                           const std::optional<NoiseModel>& noise = {});

struct ParityCell {
    double delta = 0.0;
    double mu = 0.0;
    int parity = 0;  // sign of <P> on the compiled ground state
    bool degenerate = false;
};

struct ParityScanResult {
    double t = 0.0;
    int n = 0;
    std::vector<ParityCell> cells;
    // Analytic switch positions per delta, in input order.
    std::vector<std::pair<double, ParitySwitches>> predictions;
};

// Ground-state parity over a (delta, mu) grid; mu may be negative here.
ParityScanResult parity_scan(double t, const std::vector<double>& deltas,
                             const std::vector<double>& mu_grid, int n);

struct CorrelationRow {
    double mu = 0.0;
    std::vector<int> label;
    bool degenerate = false;
    std::vector<double> values;  // <i g1 g_m>, m = 2..2n
};

std::vector<CorrelationRow> site_correlation_profile(
    const ChainSpec& spec, const std::vector<std::vector<int>>& labels,
    const std::vector<double>& mu_list);

struct EdgeFit {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double residual = 0.0;  // root-sum-square of the fit residuals
};

// Least-squares quadratic in mu of |edge_corr| over the non-degenerate rows
// of `sweep` carrying `label`. Needs at least 4 points and a full-rank grid.
EdgeFit fit_edge_decay(const SweepResult& sweep,
                       const std::vector<int>& label);
EdgeFit fit_quadratic(const std::vector<double>& mu,
                      const std::vector<double>& value);

double mean_absolute_error(const std::vector<double>& x,
                           const std::vector<double>& y);
// Coefficient of determination of the OLS regression of x on y.
double r_squared(const std::vector<double>& x, const std::vector<double>& y);

struct MeasurementRow {
    double mu = 0.0;
    std::vector<int> label;
    std::string observable;
    double value = 0.0;
    double std_error = 0.0;
    bool has_std_error = false;
};

// Reads `mu,label,observable,value[,stderr]` rows; malformed input reports
// the offending line number.
std::vector<MeasurementRow> load_measurement_csv(const std::string& path);

struct ComparisonResult {
    double me = 0.0;
    double r2 = 0.0;
    size_t pairs = 0;
};

// Joins two tables on (mu, label, observable) and scores measurement values
// against predictions.
ComparisonResult compare_tables(const std::vector<MeasurementRow>& predicted,
                                const std::vector<MeasurementRow>& measured);

struct NoiseRow {
    double tau_over_t2 = 0.0;
    std::vector<int> label;
    bool degenerate = false;
    double noisy_energy = 0.0;
};

struct NoiseSweepResult {
    ChainSpec spec;
    double t2_star = 1.0;
    double jitter_b = 0.0;
    std::uint64_t seed = 0;
    std::string version;
    std::vector<NoiseRow> rows;
};

// Dephased eigenstate energies over a list of tau / T2* ratios.
NoiseSweepResult noise_sweep(const ChainSpec& spec,
                             const std::vector<std::vector<int>>& labels,
                             const std::vector<double>& tau_ratios,
                             double jitter_b, double t2_star = 1.0,
                             std::uint64_t seed = 0);

// CSV emission, schema `mu,label,observable,value,stderr` with 17
// significant digits; labels containing commas are quoted.
void write_measurement_csv(const std::vector<MeasurementRow>& rows,
                           const std::string& path);
void write_sweep_csv(const SweepResult& result, const std::string& path);
void write_noise_csv(const NoiseSweepResult& result, const std::string& path);
std::vector<MeasurementRow> sweep_table(const SweepResult& result);

// `<experiment>_<n>_<t>_<delta>.csv` using the first bond values.
std::string experiment_filename(const std::string& experiment,
                                const ChainSpec& spec);

}  // namespace kitaev
