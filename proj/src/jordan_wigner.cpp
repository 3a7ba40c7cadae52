#include "kitaev/jordan_wigner.hpp"

#include <stdexcept>

namespace kitaev {

// Symplectic image of a single ladder operator (see pauli.cpp for the
// product-form conventions). With low = mask of qubits j < k:
//   (prod Z) X_k     -> O(x = 1<<k, z = low)
//   (prod Z) i Y_k   -> i * iXZ form: product coefficient -1 on
//                       O(x = 1<<k, z = low | 1<<k)
PauliSum jordan_wigner_ladder(int site, bool dagger, int n) {
    PauliSum p(n);
    const uint64_t bit = 1ull << site;
    const uint64_t low = bit - 1;
    const double s = dagger ? 1.0 : -1.0;
    p.add_term(bit, low, 0.5);
    p.add_term(bit, low | bit, 0.5 * s);
    return p;
}

PauliSum jordan_wigner(const FermionOperator& op, int n) {
    if (n < op.min_sites())
        throw std::out_of_range("jordan_wigner: site index out of range");
    PauliSum result(n);
    for (const auto& [mono, coeff] : op.terms()) {
        PauliSum term = PauliSum::identity(n, coeff);
        for (const Ladder& l : mono)
            term = term * jordan_wigner_ladder(l.site, l.dag, n);
        result += term;
    }
    return result;
}

}  // namespace kitaev
