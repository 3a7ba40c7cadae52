#include "kitaev/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace kitaev {

namespace {

double canonical_angle(double beta) {
    if (!std::isfinite(beta))
        throw std::invalid_argument("gate angle not finite");
    const double two_pi = 2.0 * M_PI;
    beta = std::fmod(beta, two_pi);
    if (beta > M_PI) beta -= two_pi;
    if (beta <= -M_PI) beta += two_pi;
    return beta;
}

const char* kind_name(Gate::Kind k) {
    switch (k) {
        case Gate::Kind::X: return "X";
        case Gate::Kind::RZ: return "RZ";
        case Gate::Kind::RYXXY: return "RYXXY";
    }
    throw std::logic_error("unknown gate kind");
}

Gate::Kind kind_from_name(const std::string& s) {
    if (s == "X") return Gate::Kind::X;
    if (s == "RZ") return Gate::Kind::RZ;
    if (s == "RYXXY") return Gate::Kind::RYXXY;
    throw std::invalid_argument("unknown gate kind: " + s);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Gate Gate::x(int q) { return Gate{Kind::X, q, 0.0}; }

Gate Gate::rz(int q, double beta) {
    return Gate{Kind::RZ, q, canonical_angle(beta)};
}

Gate Gate::ryxxy(int q, double alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("gate angle not finite");
    return Gate{Kind::RYXXY, q, alpha};
}

bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.q == b.q && a.angle == b.angle;
}

void GaussianCircuit::validate() const {
    if (n_qubits < 1)
        throw std::invalid_argument("circuit: n_qubits must be positive");
    for (const Gate& g : gates) {
        if (g.q < 0 || g.q >= n_qubits)
            throw std::invalid_argument("circuit: gate qubit out of range");
        if (g.kind == Gate::Kind::RYXXY && g.q + 1 >= n_qubits)
            throw std::invalid_argument(
                "circuit: RYXXY needs an adjacent pair inside the register");
        if (!std::isfinite(g.angle))
            throw std::invalid_argument("circuit: non-finite gate angle");
        if (g.kind == Gate::Kind::RZ && (g.angle <= -M_PI || g.angle > M_PI))
            throw std::invalid_argument("circuit: RZ angle not canonical");
    }
    if (!std::is_sorted(excitation_set.begin(), excitation_set.end()))
        throw std::invalid_argument("circuit: excitation set not sorted");
    if (std::adjacent_find(excitation_set.begin(), excitation_set.end()) !=
        excitation_set.end())
        throw std::invalid_argument("circuit: duplicate excitation index");
    for (int q : excitation_set)
        if (q < 0 || q >= n_qubits)
            throw std::invalid_argument("circuit: excitation out of range");
}

int GaussianCircuit::ryxxy_count() const {
    return static_cast<int>(std::count_if(
        gates.begin(), gates.end(),
        [](const Gate& g) { return g.kind == Gate::Kind::RYXXY; }));
}

int GaussianCircuit::x_count() const {
    return static_cast<int>(
        std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
            return g.kind == Gate::Kind::X;
        }));
}

std::string GaussianCircuit::to_json() const {
    nlohmann::json j;
    j["n_qubits"] = n_qubits;
    j["gates"] = nlohmann::json::array();
    for (const Gate& g : gates) {
        nlohmann::json jg;
        jg["kind"] = kind_name(g.kind);
        if (g.kind == Gate::Kind::RYXXY)
            jg["qubits"] = {g.q, g.q + 1};
        else
            jg["qubits"] = {g.q};
        jg["angle"] = g.angle;
        j["gates"].push_back(jg);
    }
    j["excitation_set"] = excitation_set;
    j["spec"] = {{"n", spec.n},
                 {"mu", spec.mu},
                 {"t", spec.t},
                 {"delta", spec.delta}};
    return j.dump(2);
}

GaussianCircuit GaussianCircuit::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    GaussianCircuit c;
    c.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& jg : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        const auto qubits = jg.at("qubits").get<std::vector<int>>();
        if (qubits.empty()) throw std::invalid_argument("gate without qubits");
        g.q = qubits.front();
        g.angle = jg.value("angle", 0.0);
        c.gates.push_back(g);
    }
    c.excitation_set = j.at("excitation_set").get<std::vector<int>>();
    const auto& js = j.at("spec");
    c.spec = ChainSpec(js.at("n").get<int>(),
                       js.at("mu").get<std::vector<double>>(),
                       js.at("t").get<std::vector<double>>(),
                       js.at("delta").get<std::vector<double>>());
    c.validate();
    return c;
}

Eigen::Matrix4cd ryxxy_matrix(double alpha) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    const double c = std::cos(alpha), s = std::sin(alpha);
    // index 2 = |01> (b_q = 0, b_{q+1} = 1), index 1 = |10>
    m(2, 2) = c;
    m(2, 1) = s;
    m(1, 2) = -s;
    m(1, 1) = c;
    return m;
}

std::string to_text(const GaussianCircuit& circuit) {
    std::string out;
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case Gate::Kind::X:
                out += "x q[" + std::to_string(g.q) + "];\n";
                break;
            case Gate::Kind::RZ:
                out += "rz(" + fmt17(g.angle) + ") q[" + std::to_string(g.q) +
                       "];\n";
                break;
            case Gate::Kind::RYXXY:
                out += "ryxxy(" + fmt17(g.angle) + ") q[" +
                       std::to_string(g.q) + "],q[" + std::to_string(g.q + 1) +
                       "];\n";
                break;
        }
    }
    return out;
}

}  // namespace kitaev
