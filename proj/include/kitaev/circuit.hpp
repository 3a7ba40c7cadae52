#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "kitaev/chain_spec.hpp"

namespace kitaev {

struct Gate {
    enum class Kind { X, RZ, RYXXY };

    Kind kind = Kind::X;
    int q = 0;        // RYXXY acts on the adjacent pair (q, q+1)
    double angle = 0.0;

    static Gate x(int q);
    static Gate rz(int q, double beta);  // beta stored in (-pi, pi]
    static Gate ryxxy(int q, double alpha);
};

bool operator==(const Gate& a, const Gate& b);

// Eigenstate-preparation circuit together with the chain it was compiled
// from and the excitation labels it realizes.
struct GaussianCircuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::vector<int> excitation_set;
    ChainSpec spec;

    // Throws std::invalid_argument when a gate index is out of range, an
    // RYXXY is not adjacent-pair, an angle is non-finite or an RZ angle is
    // outside (-pi, pi], or the excitation set is not sorted/unique/in range.
    void validate() const;

    int ryxxy_count() const;
    int x_count() const;

    std::string to_json() const;
    static GaussianCircuit from_json(const std::string& text);
};

// exp(-i (XY - YX) alpha / 2) on an adjacent pair; the basis index of the
// 4x4 matrix is b_q + 2 b_{q+1}. Identity on |00>, |11>; on the ordered
// basis (|01>, |10>) (first slot = qubit q) it is the real rotation
// [[cos a, sin a], [-sin a, cos a]].
Eigen::Matrix4cd ryxxy_matrix(double alpha);

// One gate per line, lowercase mnemonic with the angle argument in radians
// at 17 significant digits: e.g. "ryxxy(0.5) q[0],q[1];".
std::string to_text(const GaussianCircuit& circuit);

}  // namespace kitaev
