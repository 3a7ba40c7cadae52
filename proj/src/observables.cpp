#include "kitaev/observables.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "kitaev/errors.hpp"
#include "kitaev/fermion_op.hpp"
#include "kitaev/jordan_wigner.hpp"

namespace kitaev {

namespace {

std::mutex cache_mutex;

void check_site_count(int n) {
    if (n < 1 || n > 24) {
        throw std::out_of_range("site count out of range: " +
                                std::to_string(n));
    }
}

PauliSum build_majorana(int m, int n) {
    const int site = (m - 1) / 2;  // 0-based
    std::string label(static_cast<size_t>(n), 'I');
    for (int j = 0; j < site; ++j) {
        label[static_cast<size_t>(j)] = 'Z';
    }
    label[static_cast<size_t>(site)] = (m % 2 == 1) ? 'X' : 'Y';
    return PauliSum::from_label(label);
}

}  // namespace

PauliSum majorana_operator(int m, int n) {
    check_site_count(n);
    if (m < 1 || m > 2 * n) {
        throw std::out_of_range("Majorana index out of range: " +
                                std::to_string(m));
    }
    static std::map<std::pair<int, int>, PauliSum> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({m, n});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(m, n), build_majorana(m, n)).first;
    }
    return it->second;
}

PauliSum site_correlation_op(int m, int n) {
    check_site_count(n);
    if (m < 1 || m > 2 * n) {
        throw std::out_of_range("Majorana index out of range: " +
                                std::to_string(m));
    }
    if (m == 1) {
        throw NonHermitianObservable(
            "i gamma_1 gamma_1 is not a Hermitian correlation");
    }
    static std::map<std::pair<int, int>, PauliSum> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({m, n});
    if (it == cache.end()) {
        PauliSum op = std::complex<double>(0.0, 1.0) *
                      (build_majorana(1, n) * build_majorana(m, n));
        it = cache.emplace(std::make_pair(m, n), std::move(op)).first;
    }
    return it->second;
}

PauliSum edge_correlation_op(int n) {
    return site_correlation_op(2 * n, n);
}

PauliSum parity_op(int n) {
    check_site_count(n);
    static std::map<int, PauliSum> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, PauliSum::from_label(
                                  std::string(static_cast<size_t>(n), 'Z')))
                 .first;
    }
    return it->second;
}

PauliSum number_op(int n) {
    check_site_count(n);
    static std::map<int, PauliSum> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        PauliSum op = PauliSum::identity(n, 0.5 * n);
        for (int k = 0; k < n; ++k) {
            std::string label(static_cast<size_t>(n), 'I');
            label[static_cast<size_t>(k)] = 'Z';
            op -= PauliSum::from_label(label, 0.5);
        }
        it = cache.emplace(n, std::move(op)).first;
    }
    return it->second;
}

PauliSum hamiltonian_op(const ChainSpec& spec) {
    spec.validate();
    return jordan_wigner(build_kitaev(spec), spec.n);
}

MeasureRecord measure_all(const StateVector& psi, const ChainSpec& spec,
                          const std::vector<int>& label) {
    spec.validate();
    MeasureRecord rec;
    rec.label = label;
    rec.mu = spec.mu.empty() ? 0.0 : spec.mu.front();
    rec.energy = expectation(hamiltonian_op(spec), psi);
    rec.parity = expectation(parity_op(spec.n), psi);
    rec.number = expectation(number_op(spec.n), psi);
    rec.edge_corr = expectation(edge_correlation_op(spec.n), psi);
    return rec;
}

}  // namespace kitaev
