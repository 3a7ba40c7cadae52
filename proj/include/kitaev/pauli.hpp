#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kitaev {

// Weighted sum of n-qubit Pauli strings.
//
// Internally a term is stored in symplectic form as a coefficient of the
// operator product O(x, z) = prod_q X_q^{x_q} Z_q^{z_q} (bit q of the masks
// refers to qubit q). The familiar I/X/Y/Z string for a term is
// P = i^{popcount(x & z)} O(x, z), so the displayed coefficient of the string
// is c_prod * (-i)^{popcount(x & z)}. A Hermitian PauliSum has all displayed
// coefficients real.
class PauliSum {
public:
    using Complex = std::complex<double>;
    using Key = std::pair<uint64_t, uint64_t>;  // (x, z)

    struct Term {
        uint64_t x = 0;
        uint64_t z = 0;
        Complex coeff;  // coefficient of O(x, z), the product form
    };

    PauliSum() = default;
    explicit PauliSum(int n_qubits);

    static PauliSum identity(int n_qubits, Complex c = 1.0);
    // label[q] in {I, X, Y, Z} addresses qubit q (leftmost char = qubit 0).
    static PauliSum from_label(const std::string& label, Complex c = 1.0);

    int n_qubits() const { return n_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator-=(const PauliSum& other);
    PauliSum& operator*=(Complex s);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
    friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
    PauliSum operator*(const PauliSum& other) const;

    PauliSum adjoint() const;

    // Drops terms with |coeff| <= eps. Called by the arithmetic operators
    // with the default threshold, so sums never carry zero entries.
    void prune(double eps = kPruneEps);

    bool is_hermitian(double tol = 1e-10) const;

    // Raw symplectic terms (product-form coefficients), map-ordered.
    std::vector<Term> terms() const;

    // Canonical string view: {"IZX" -> coeff of the I  Z  X string, ...}.
    std::map<std::string, Complex> labeled_terms() const;
    // Displayed coefficient of one string (0 if absent).
    Complex coefficient(const std::string& label) const;

    static constexpr double kPruneEps = 1e-14;

private:
    int n_ = 0;
    std::map<Key, Complex> terms_;

    void add_term(uint64_t x, uint64_t z, Complex c);
    friend PauliSum jordan_wigner_ladder(int site, bool dagger, int n);
};

}  // namespace kitaev
