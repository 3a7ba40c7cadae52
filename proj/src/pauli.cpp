#include "kitaev/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace kitaev {

namespace {

// i^k for k mod 4.
PauliSum::Complex ipow(unsigned k) {
    switch (k & 3u) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 63)
        throw std::invalid_argument("PauliSum: qubit count out of range");
}

PauliSum PauliSum::identity(int n_qubits, Complex c) {
    PauliSum p(n_qubits);
    p.add_term(0, 0, c);
    p.prune();
    return p;
}

PauliSum PauliSum::from_label(const std::string& label, Complex c) {
    PauliSum p(static_cast<int>(label.size()));
    uint64_t x = 0, z = 0;
    unsigned ny = 0;
    for (size_t q = 0; q < label.size(); ++q) {
        switch (label[q]) {
            case 'I': break;
            case 'X': x |= 1ull << q; break;
            case 'Z': z |= 1ull << q; break;
            case 'Y': x |= 1ull << q; z |= 1ull << q; ++ny; break;
            default:
                throw std::invalid_argument("PauliSum: bad label char");
        }
    }
    // string = i^{#Y} O(x,z), so the product-form coefficient gains i^{#Y}
    p.add_term(x, z, c * ipow(ny));
    p.prune();
    return p;
}

void PauliSum::add_term(uint64_t x, uint64_t z, Complex c) {
    auto [it, inserted] = terms_.try_emplace({x, z}, c);
    if (!inserted) it->second += c;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("PauliSum: qubit count mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    prune();
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("PauliSum: qubit count mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
    prune();
    return *this;
}

PauliSum& PauliSum::operator*=(Complex s) {
    for (auto& [k, c] : terms_) c *= s;
    prune();
    return *this;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("PauliSum: qubit count mismatch");
    PauliSum out(n_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
            const int sgn =
                (std::popcount(ka.second & kb.first) & 1) ? -1 : 1;
            out.add_term(ka.first ^ kb.first, ka.second ^ kb.second,
                         static_cast<double>(sgn) * ca * cb);
        }
    }
    out.prune();
    return out;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_);
    for (const auto& [k, c] : terms_) {
        // O(x,z)^d = Z^z X^x = (-1)^{|x & z|} O(x,z)
        const int sgn = (std::popcount(k.first & k.second) & 1) ? -1 : 1;
        out.add_term(k.first, k.second,
                     static_cast<double>(sgn) * std::conj(c));
    }
    out.prune();
    return out;
}

void PauliSum::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps)
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& [k, c] : terms_) {
        const Complex displayed =
            c * ipow(static_cast<unsigned>(
                    4 - (std::popcount(k.first & k.second) & 3)));
        if (std::abs(displayed.imag()) >
            tol * std::max(1.0, std::abs(displayed)))
            return false;
    }
    return true;
}

std::vector<PauliSum::Term> PauliSum::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({k.first, k.second, c});
    return out;
}

std::map<std::string, PauliSum::Complex> PauliSum::labeled_terms() const {
    std::map<std::string, Complex> out;
    for (const auto& [k, c] : terms_) {
        std::string label(static_cast<size_t>(n_), 'I');
        for (int q = 0; q < n_; ++q) {
            const bool bx = (k.first >> q) & 1;
            const bool bz = (k.second >> q) & 1;
            if (bx && bz)
                label[static_cast<size_t>(q)] = 'Y';
            else if (bx)
                label[static_cast<size_t>(q)] = 'X';
            else if (bz)
                label[static_cast<size_t>(q)] = 'Z';
        }
        const unsigned ny =
            static_cast<unsigned>(std::popcount(k.first & k.second));
        out[label] = c * ipow(4 - (ny & 3));  // (-i)^{#Y}
    }
    return out;
}

PauliSum::Complex PauliSum::coefficient(const std::string& label) const {
    auto lt = labeled_terms();
    auto it = lt.find(label);
    return it == lt.end() ? Complex(0.0) : it->second;
}

}  // namespace kitaev
