#include "kitaev/fermion_op.hpp"

#include <algorithm>
#include <stdexcept>

namespace kitaev {

FermionOperator FermionOperator::constant(Complex c) {
    FermionOperator op;
    op.add_normal_ordered({}, c);
    op.prune();
    return op;
}

FermionOperator FermionOperator::c(int site) {
    return term(1.0, {{site, false}});
}

FermionOperator FermionOperator::cdag(int site) {
    return term(1.0, {{site, true}});
}

FermionOperator FermionOperator::term(Complex coeff, const Monomial& ops) {
    for (const Ladder& l : ops)
        if (l.site < 0)
            throw std::invalid_argument("FermionOperator: negative site");
    FermionOperator op;
    op.add_normal_ordered(ops, coeff);
    op.prune();
    return op;
}

// Iterative Wick reordering. A work stack holds (monomial, coeff) pairs; each
// pass fixes the first adjacent violation of the canonical order, producing
// at most two successors (swap, and a contraction when c_i c^d_i meet).
void FermionOperator::add_normal_ordered(const Monomial& ops, Complex coeff) {
    std::vector<std::pair<Monomial, Complex>> work{{ops, coeff}};
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        bool reduced = false;
        for (size_t i = 0; i + 1 < m.size(); ++i) {
            const Ladder a = m[i];
            const Ladder b = m[i + 1];
            if (!a.dag && b.dag) {
                // c_i c^d_j = delta_ij - c^d_j c_i
                Monomial swapped = m;
                std::swap(swapped[i], swapped[i + 1]);
                work.emplace_back(std::move(swapped), -c);
                if (a.site == b.site) {
                    Monomial contracted;
                    contracted.reserve(m.size() - 2);
                    contracted.insert(contracted.end(), m.begin(),
                                      m.begin() + static_cast<long>(i));
                    contracted.insert(contracted.end(),
                                      m.begin() + static_cast<long>(i) + 2,
                                      m.end());
                    work.emplace_back(std::move(contracted), c);
                }
                reduced = true;
                break;
            }
            if (a.dag == b.dag) {
                if (a.site == b.site) {
                    reduced = true;  // (c^d)^2 = c^2 = 0
                    break;
                }
                if (a.site > b.site) {
                    Monomial swapped = m;
                    std::swap(swapped[i], swapped[i + 1]);
                    work.emplace_back(std::move(swapped), -c);
                    reduced = true;
                    break;
                }
            }
        }
        if (!reduced) {
            auto [it, inserted] = terms_.try_emplace(m, c);
            if (!inserted) it->second += c;
        }
    }
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second += c;
    }
    prune();
    return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) it->second -= c;
    }
    prune();
    return *this;
}

FermionOperator& FermionOperator::operator*=(Complex s) {
    for (auto& [m, c] : terms_) c *= s;
    prune();
    return *this;
}

FermionOperator FermionOperator::operator*(const FermionOperator& other) const {
    FermionOperator out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial prod = ma;
            prod.insert(prod.end(), mb.begin(), mb.end());
            out.add_normal_ordered(prod, ca * cb);
        }
    }
    out.prune();
    return out;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator out;
    for (const auto& [m, c] : terms_) {
        Monomial rev(m.rbegin(), m.rend());
        for (Ladder& l : rev) l.dag = !l.dag;
        out.add_normal_ordered(rev, std::conj(c));
    }
    out.prune();
    return out;
}

bool FermionOperator::is_hermitian(double tol) const {
    FermionOperator diff = *this;
    diff -= adjoint();
    for (const auto& [m, c] : diff.terms_)
        if (std::abs(c) > tol) return false;
    return true;
}

FermionOperator::Complex FermionOperator::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

int FermionOperator::min_sites() const {
    int n = 0;
    for (const auto& [m, c] : terms_)
        for (const Ladder& l : m) n = std::max(n, l.site + 1);
    return n;
}

int FermionOperator::max_degree() const {
    size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return static_cast<int>(d);
}

void FermionOperator::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps)
            it = terms_.erase(it);
        else
            ++it;
    }
}

FermionOperator build_kitaev(const ChainSpec& spec) {
    spec.validate();
    FermionOperator h;
    using F = FermionOperator;
    for (int k = 0; k < spec.n; ++k)
        h += spec.mu[static_cast<size_t>(k)] *
             F::term(1.0, {{k, true}, {k, false}});
    for (int k = 0; k + 1 < spec.n; ++k) {
        const double tk = spec.t[static_cast<size_t>(k)];
        const double dk = spec.delta[static_cast<size_t>(k)];
        h -= tk * (F::term(1.0, {{k, true}, {k + 1, false}}) +
                   F::term(1.0, {{k + 1, true}, {k, false}}));
        h += dk * (F::term(1.0, {{k, true}, {k + 1, true}}) +
                   F::term(1.0, {{k + 1, false}, {k, false}}));
    }
    return h;
}

}  // namespace kitaev
