#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kitaev/compiler.hpp"
#include "kitaev/errors.hpp"
#include "kitaev/experiments.hpp"
#include "kitaev/observables.hpp"
#include "kitaev/simulator.hpp"
#include "kitaev/topology.hpp"
#include "kitaev/version.hpp"

namespace {

using namespace kitaev;

constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') {
        return path;
    }
    if (const char* dir = std::getenv("KITAEVSIM_OUT_DIR")) {
        if (*dir != '\0') {
            return std::string(dir) + "/" + path;
        }
    }
    return path;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        out.push_back(std::stod(tok, &pos));
    }
    return out;
}

std::vector<int> parse_excite(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    if (text.front() == '[') {
        return parse_label(text);
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(std::stoi(tok));
    }
    return out;
}

// "start:stop:points" inclusive linear grid.
std::vector<double> parse_grid(const std::string& text) {
    const size_t a = text.find(':');
    const size_t b = text.rfind(':');
    if (a == std::string::npos || b == a) {
        throw std::invalid_argument("grid must be start:stop:points");
    }
    const double start = std::stod(text.substr(0, a));
    const double stop = std::stod(text.substr(a + 1, b - a - 1));
    const int points = std::stoi(text.substr(b + 1));
    if (points < 1) {
        throw std::invalid_argument("grid needs at least 1 point");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(points));
    if (points == 1) {
        grid.push_back(start);
        return grid;
    }
    for (int i = 0; i < points; ++i) {
        grid.push_back(start + (stop - start) * i / (points - 1));
    }
    return grid;
}

std::vector<std::vector<int>> parse_labels(const std::string& text, int n) {
    if (text == "all") {
        return all_excitation_labels(n);
    }
    std::vector<std::vector<int>> labels;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (!tok.empty()) {
            labels.push_back(parse_label(tok));
        }
    }
    if (labels.empty()) {
        throw std::invalid_argument("no labels given");
    }
    return labels;
}

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

void write_svg(const std::string& path, const std::vector<Series>& series,
               const std::string& title) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#17becf", "#7f7f7f"};
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double w = 800.0, h = 600.0, ml = 70.0, mr = 30.0, mt = 40.0,
                 mb = 50.0;
    auto px = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
    };
    auto py = [&](double y) {
        return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
    };
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-size=\"16\">"
        << title << "</text>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
        << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%g</text>", ml,
                  h - mb + 24.0, xmin);
    out << buf << "\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" "
                  "font-size=\"12\">%g</text>",
                  w - mr, h - mb + 24.0, xmax);
    out << buf << "\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" "
                  "font-size=\"12\">%g</text>",
                  ml - 8.0, h - mb, ymin);
    out << buf << "\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" "
                  "font-size=\"12\">%g</text>",
                  ml - 8.0, mt + 12.0, ymax);
    out << buf << "\n";
    for (size_t i = 0; i < series.size(); ++i) {
        const char* color = kColors[i % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[i].points) {
            out << px(x) << "," << py(y) << " ";
        }
        out << "\"/>\n";
        out << "<text x=\"" << w - mr - 120.0 << "\" y=\""
            << mt + 16.0 * (static_cast<double>(i) + 1.0) << "\" fill=\""
            << color << "\" font-size=\"12\">" << series[i].name
            << "</text>\n";
    }
    out << "</svg>\n";
}

struct CompileArgs {
    int n = 3;
    double t = -1.0;
    double delta = 1.0;
    double mu = 1e-8;
    std::string excite;
    std::string format = "json";
    std::string out;
};

int run_compile(const CompileArgs& a) {
    const ChainSpec spec(a.n, a.mu, a.t, a.delta);
    const GaussianCircuit circuit =
        compile_eigenstate(spec, parse_excite(a.excite));
    const std::string payload =
        a.format == "text" ? to_text(circuit) : circuit.to_json();
    if (a.out.empty()) {
        std::cout << payload << "\n";
    } else {
        const std::string path = resolve_out(a.out);
        std::ofstream f(path);
        if (!f) {
            throw std::runtime_error("cannot write " + path);
        }
        f << payload << "\n";
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

struct SweepArgs {
    int n = 3;
    double t = -1.0;
    double delta = 1.0;
    std::string grid;
    std::string labels = "all";
    std::string observables = "all";
    std::string noise;
    long shots = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string plot;
};

int run_sweep(const SweepArgs& a) {
    const ChainSpec spec(a.n, 1e-8, a.t, a.delta);
    const std::vector<double> grid =
        a.grid.empty() ? default_mu_grid() : parse_grid(a.grid);
    const auto labels = parse_labels(a.labels, a.n);
    std::optional<NoiseModel> noise;
    if (!a.noise.empty()) {
        const std::vector<double> v = parse_double_list(a.noise);
        if (v.size() != 4) {
            throw std::invalid_argument("--noise wants t2,tau,b,seed");
        }
        NoiseModel nm;
        nm.t2_star = v[0];
        nm.tau = v[1];
        nm.jitter_b = v[2];
        nm.seed = static_cast<std::uint64_t>(v[3]);
        nm.validate();
        noise = nm;
    }
    const SweepResult result = sweep_spectrum(spec, grid, labels, noise);
    std::vector<MeasurementRow> rows = sweep_table(result);
    if (a.observables != "all") {
        std::vector<std::string> keep;
        std::stringstream ss(a.observables);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            keep.push_back(tok == "edge" ? "edge_corr" : tok);
        }
        std::erase_if(rows, [&keep](const MeasurementRow& r) {
            return std::find(keep.begin(), keep.end(), r.observable) ==
                   keep.end();
        });
    }
    if (a.shots > 0) {
        std::uint64_t row_index = 0;
        for (const double mu : grid) {
            const ChainSpec point = spec.with_mu(mu);
            const PauliSum h_op = hamiltonian_op(point);
            for (const auto& label : labels) {
                try {
                    const StateVector psi =
                        apply_circuit(compile_eigenstate(point, label));
                    const SampledExpectation se = sample_expectation(
                        psi, h_op, a.shots, a.seed + kSeedStride * row_index);
                    MeasurementRow row;
                    row.mu = mu;
                    row.label = label;
                    row.observable = "sampled_energy";
                    row.value = se.estimate;
                    row.std_error = se.std_error;
                    row.has_std_error = true;
                    rows.push_back(std::move(row));
                } catch (const DegenerateHamiltonian&) {
                }
                ++row_index;
            }
        }
    }
    const std::string out = resolve_out(
        a.out.empty() ? experiment_filename("sweep", spec) : a.out);
    write_measurement_csv(rows, out);
    std::cout << "wrote " << out << " (" << rows.size() << " rows)\n";
    if (!a.plot.empty()) {
        std::vector<Series> series;
        for (const auto& label : labels) {
            Series s;
            s.name = "energy " + label_to_string(label);
            for (const SweepRow& row : result.rows) {
                if (!row.degenerate && row.label == label) {
                    s.points.emplace_back(row.mu, row.energy);
                }
            }
            series.push_back(std::move(s));
        }
        const std::string plot = resolve_out(a.plot);
        write_svg(plot, series, "energy vs mu");
        std::cout << "wrote " << plot << "\n";
    }
    return 0;
}

struct ParityScanArgs {
    int n = 3;
    double t = -1.0;
    std::string deltas = "1";
    std::string grid = "-5e-8:5e-8:400";
    std::string out;
};

int run_parity_scan(const ParityScanArgs& a) {
    const std::vector<double> deltas = parse_double_list(a.deltas);
    const std::vector<double> grid = parse_grid(a.grid);
    const ParityScanResult scan = parity_scan(a.t, deltas, grid, a.n);
    for (const auto& [delta, pred] : scan.predictions) {
        std::cout << "delta=" << delta << " predicted switches:";
        if (pred.imaginary_root) {
            std::cout << " none (imaginary root)";
        } else {
            for (const double v : pred.mu_values) {
                std::cout << " " << v;
            }
        }
        std::cout << "\n";
    }
    size_t idx = 0;
    for (const double delta : deltas) {
        int prev = 0;
        double prev_mu = 0.0;
        for (size_t i = 0; i < grid.size(); ++i, ++idx) {
            const ParityCell& cell = scan.cells[idx];
            if (cell.degenerate) {
                continue;
            }
            if (prev != 0 && cell.parity != prev) {
                std::cout << "delta=" << delta << " flip between mu="
                          << prev_mu << " and mu=" << cell.mu << "\n";
            }
            prev = cell.parity;
            prev_mu = cell.mu;
        }
    }
    if (!a.out.empty()) {
        std::vector<MeasurementRow> rows;
        for (const ParityCell& cell : scan.cells) {
            if (cell.degenerate) {
                continue;
            }
            MeasurementRow row;
            row.mu = cell.mu;
            row.label = {};
            row.observable = "parity_delta_" + std::to_string(cell.delta);
            row.value = cell.parity;
            row.has_std_error = true;
            rows.push_back(std::move(row));
        }
        const std::string out = resolve_out(a.out);
        write_measurement_csv(rows, out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

struct CorrArgs {
    int n = 3;
    double t = -1.0;
    double delta = 1.0;
    std::string mu = "1e-8";
    std::string labels = "[0]";
    std::string out;
    std::string plot;
};

int run_corr(const CorrArgs& a) {
    const ChainSpec spec(a.n, 1e-8, a.t, a.delta);
    const auto labels = parse_labels(a.labels, a.n);
    const std::vector<double> mu_list = parse_double_list(a.mu);
    const auto profile = site_correlation_profile(spec, labels, mu_list);
    std::vector<MeasurementRow> rows;
    for (const CorrelationRow& row : profile) {
        if (row.degenerate) {
            continue;
        }
        for (size_t i = 0; i < row.values.size(); ++i) {
            MeasurementRow r;
            r.mu = row.mu;
            r.label = row.label;
            r.observable = "site_corr_" + std::to_string(i + 2);
            r.value = row.values[i];
            r.has_std_error = true;
            rows.push_back(std::move(r));
        }
    }
    const std::string out = resolve_out(
        a.out.empty() ? experiment_filename("corr", spec) : a.out);
    write_measurement_csv(rows, out);
    std::cout << "wrote " << out << " (" << rows.size() << " rows)\n";
    if (!a.plot.empty()) {
        std::vector<Series> series;
        for (const CorrelationRow& row : profile) {
            if (row.degenerate) {
                continue;
            }
            Series s;
            s.name = label_to_string(row.label) + " mu=" +
                     std::to_string(row.mu);
            for (size_t i = 0; i < row.values.size(); ++i) {
                s.points.emplace_back(static_cast<double>(i + 2),
                                      std::abs(row.values[i]));
            }
            series.push_back(std::move(s));
        }
        const std::string plot = resolve_out(a.plot);
        write_svg(plot, series, "|<i g1 gm>| vs m");
        std::cout << "wrote " << plot << "\n";
    }
    return 0;
}

struct TopoArgs {
    int n = 3;
    double t = -1.0;
    double delta = 1.0;
    std::string mu = "1e-8,3";
    int k_samples = 4001;
};

int run_topo(const TopoArgs& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", critical_mu(a.n, a.t));
    std::cout << "critical_mu = " << buf << "\n";
    const ParitySwitches ps = parity_switch_mu(a.t, a.delta, a.n);
    std::cout << "parity_switch_mu =";
    if (ps.imaginary_root) {
        std::cout << " none (imaginary root)";
    } else {
        for (const double v : ps.mu_values) {
            std::snprintf(buf, sizeof buf, " %.17g", v);
            std::cout << buf;
        }
        if (ps.mu_values.empty()) {
            std::cout << " (none)";
        }
    }
    std::cout << "\n";
    WindingConfig cfg;
    cfg.k_samples = a.k_samples;
    for (const double mu : parse_double_list(a.mu)) {
        std::cout << "winding(mu=" << mu << ") = ";
        try {
            std::cout << winding_number(mu, a.t, a.delta, a.n, cfg) << "\n";
        } catch (const BoundaryPoint&) {
            std::cout << "boundary\n";
        }
    }
    return 0;
}

struct FitArgs {
    std::string in;
    std::string label = "[0]";
    std::string observable = "edge_corr";
};

int run_fit(const FitArgs& a) {
    const auto table = load_measurement_csv(a.in);
    const std::vector<int> label = parse_label(a.label);
    std::vector<double> mu;
    std::vector<double> value;
    for (const MeasurementRow& row : table) {
        if (row.label == label && row.observable == a.observable) {
            mu.push_back(row.mu);
            value.push_back(std::abs(row.value));
        }
    }
    const EdgeFit fit = fit_quadratic(mu, value);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "fit c0=%.17g c1=%.17g c2=%.17g residual=%.17g", fit.c0,
                  fit.c1, fit.c2, fit.residual);
    std::cout << buf << "\n";
    return 0;
}

struct CompareArgs {
    std::string pred;
    std::string meas;
};

int run_compare(const CompareArgs& a) {
    const ComparisonResult r = compare_tables(load_measurement_csv(a.pred),
                                              load_measurement_csv(a.meas));
    char buf[128];
    std::snprintf(buf, sizeof buf, "ME=%.17g R2=%.17g pairs=%zu", r.me, r.r2,
                  r.pairs);
    std::cout << buf << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kitaev chain eigenstate circuits, simulation and analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config");
    app.require_subcommand(1);

    CompileArgs ca;
    CLI::App* compile = app.add_subcommand(
        "compile", "Compile an eigenstate preparation circuit");
    compile->add_option("--n", ca.n, "chain length")->capture_default_str();
    compile->add_option("--t", ca.t, "hopping")->capture_default_str();
    compile->add_option("--delta", ca.delta, "pairing")
        ->capture_default_str();
    compile->add_option("--mu", ca.mu, "chemical potential")
        ->capture_default_str();
    compile->add_option("--excite", ca.excite,
                        "excited mode indices, e.g. 0,2");
    compile->add_option("--format", ca.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    compile->add_option("--out", ca.out, "output file (default stdout)");

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep mu over eigenstates and measure observables");
    sweep->add_option("--n", sa.n)->capture_default_str();
    sweep->add_option("--t", sa.t)->capture_default_str();
    sweep->add_option("--delta", sa.delta)->capture_default_str();
    sweep->add_option("--grid", sa.grid,
                      "start:stop:points (default 21-point grid)");
    sweep->add_option("--labels", sa.labels,
                      "all or ;-separated, e.g. [];[0];[1,2]")
        ->capture_default_str();
    sweep->add_option("--observables", sa.observables,
                      "all or comma list of energy,parity,number,edge")
        ->capture_default_str();
    sweep->add_option("--noise", sa.noise, "t2,tau,b,seed");
    sweep->add_option("--shots", sa.shots,
                      "sampled energy estimates per row");
    sweep->add_option("--seed", sa.seed, "sampling seed");
    sweep->add_option("--out", sa.out, "output CSV");
    sweep->add_option("--plot", sa.plot, "energy plot SVG");

    ParityScanArgs pa;
    CLI::App* pscan = app.add_subcommand(
        "parity-scan", "Ground-state parity over a (delta, mu) grid");
    pscan->add_option("--n", pa.n)->capture_default_str();
    pscan->add_option("--t", pa.t)->capture_default_str();
    pscan->add_option("--delta", pa.deltas, "comma list of delta values")
        ->capture_default_str();
    pscan->add_option("--grid", pa.grid, "start:stop:points")
        ->capture_default_str();
    pscan->add_option("--out", pa.out, "cell CSV");

    CorrArgs ra;
    CLI::App* corr = app.add_subcommand(
        "corr", "Majorana site correlation profile");
    corr->add_option("--n", ra.n)->capture_default_str();
    corr->add_option("--t", ra.t)->capture_default_str();
    corr->add_option("--delta", ra.delta)->capture_default_str();
    corr->add_option("--mu", ra.mu, "comma list of mu values")
        ->capture_default_str();
    corr->add_option("--labels", ra.labels)->capture_default_str();
    corr->add_option("--out", ra.out, "output CSV");
    corr->add_option("--plot", ra.plot, "profile plot SVG");

    TopoArgs ta;
    CLI::App* topo = app.add_subcommand(
        "topo", "Critical mu, parity switches and winding numbers");
    topo->add_option("--n", ta.n)->capture_default_str();
    topo->add_option("--t", ta.t)->capture_default_str();
    topo->add_option("--delta", ta.delta)->capture_default_str();
    topo->add_option("--mu", ta.mu, "comma list for winding evaluation")
        ->capture_default_str();
    topo->add_option("--k-samples", ta.k_samples)->capture_default_str();

    FitArgs fa;
    CLI::App* fit = app.add_subcommand(
        "fit", "Quadratic fit of |observable| vs mu from a CSV");
    fit->add_option("--in", fa.in, "input CSV")->required();
    fit->add_option("--label", fa.label)->capture_default_str();
    fit->add_option("--observable", fa.observable)->capture_default_str();

    CompareArgs ma;
    CLI::App* compare = app.add_subcommand(
        "compare", "ME and R2 between prediction and measurement CSVs");
    compare->add_option("--pred", ma.pred, "prediction CSV")->required();
    compare->add_option("--meas", ma.meas, "measurement CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (compile->parsed()) return run_compile(ca);
        if (sweep->parsed()) return run_sweep(sa);
        if (pscan->parsed()) return run_parity_scan(pa);
        if (corr->parsed()) return run_corr(ra);
        if (topo->parsed()) return run_topo(ta);
        if (fit->parsed()) return run_fit(fa);
        if (compare->parsed()) return run_compare(ma);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
