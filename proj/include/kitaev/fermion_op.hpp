#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "kitaev/chain_spec.hpp"

namespace kitaev {

// One ladder operator: c_site (dag == false) or c^d_site (dag == true).
struct Ladder {
    int site = 0;
    bool dag = false;

    friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

// Polynomial in fermionic ladder operators, kept in normal-ordered canonical
// form: within each monomial all creation operators stand left of all
// annihilation operators and site indices ascend within each group.
// Anticommutation signs and contraction terms from reordering are absorbed
// into the coefficients. The empty monomial is the scalar part.
class FermionOperator {
public:
    using Complex = std::complex<double>;
    using Monomial = std::vector<Ladder>;

    FermionOperator() = default;

    static FermionOperator constant(Complex c);
    static FermionOperator c(int site);
    static FermionOperator cdag(int site);
    // coeff * product (given left to right, any order; normal-ordered here).
    static FermionOperator term(Complex coeff, const Monomial& ops);

    FermionOperator& operator+=(const FermionOperator& other);
    FermionOperator& operator-=(const FermionOperator& other);
    FermionOperator& operator*=(Complex s);
    friend FermionOperator operator+(FermionOperator a,
                                     const FermionOperator& b) {
        return a += b;
    }
    friend FermionOperator operator-(FermionOperator a,
                                     const FermionOperator& b) {
        return a -= b;
    }
    friend FermionOperator operator*(FermionOperator a, Complex s) {
        return a *= s;
    }
    friend FermionOperator operator*(Complex s, FermionOperator a) {
        return a *= s;
    }
    FermionOperator operator*(const FermionOperator& other) const;

    FermionOperator adjoint() const;
    bool is_hermitian(double tol = 1e-10) const;

    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<Monomial, Complex>& terms() const { return terms_; }
    Complex coefficient(const Monomial& m) const;

    // Largest site index + 1 over all monomials (0 for a pure scalar).
    int min_sites() const;

    // Highest monomial degree (0 for scalar / empty).
    int max_degree() const;

    void prune(double eps = kPruneEps);

    static constexpr double kPruneEps = 1e-14;

private:
    std::map<Monomial, Complex> terms_;

    void add_normal_ordered(const Monomial& ops, Complex coeff);
};

// H = sum_k mu_k c^d_k c_k
//   - sum_k ( t_k (c^d_k c_{k+1} + c^d_{k+1} c_k)
//             - delta_k (c^d_k c^d_{k+1} + c_{k+1} c_k) )
// Pairing orientation fixed as c^d_k c^d_{k+1} (left site first); flipping it
// is the gauge delta -> -delta.
FermionOperator build_kitaev(const ChainSpec& spec);

}  // namespace kitaev
