#ifndef NILCERT_DERIVATIONS_DERIVATIONS_HPP
#define NILCERT_DERIVATIONS_DERIVATIONS_HPP

#include <vector>

#include "algebra/structure_table.hpp"

namespace nilcert {

/// Derivations are stored row-wise: D(e_a) = sum_b D(a, b) e_b.
template <class F>
struct DerivationSpace {
    std::size_t dimension = 0;
    std::vector<Matrix<F>> basis;
};

template <class F>
bool is_derivation(const StructureTable<F>& alg, const Matrix<F>& d) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // D(e_i e_j) == D(e_i) e_j + e_i D(e_j)
            auto lhs = row_times<F>(alg.basis_product(i, j), d);
            std::vector<F> ei(n, F(0)), ej(n, F(0));
            ei[i] = F(1);
            ej[j] = F(1);
            auto r1 = multiply(alg, d.row_vector(i), ej);
            auto r2 = multiply(alg, ei, d.row_vector(j));
            for (std::size_t m = 0; m < n; ++m)
                if (!(lhs[m] == r1[m] + r2[m])) return false;
        }
    return true;
}

/// Solves the n^3 x n^2 Leibniz system exactly; the basis is the reduced
/// echelon kernel basis, reshaped into n x n matrices.
template <class F>
DerivationSpace<F> derivation_space(const StructureTable<F>& alg) {
    const std::size_t n = alg.dim();
    auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
    Matrix<F> system(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const std::size_t row = (i * n + j) * n + m;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!alg.at(i, j, k).is_zero()) system(row, var(k, m)) += alg.at(i, j, k);
                    if (!alg.at(k, j, m).is_zero()) system(row, var(i, k)) -= alg.at(k, j, m);
                    if (!alg.at(i, k, m).is_zero()) system(row, var(j, k)) -= alg.at(i, k, m);
                }
            }
    Matrix<F> ker = kernel(system);
    DerivationSpace<F> out;
    out.dimension = ker.rows();
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Matrix<F> d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d(a, b) = ker(r, var(a, b));
        out.basis.push_back(std::move(d));
    }
    return out;
}

template <class F>
std::size_t orbit_dimension(const StructureTable<F>& alg) {
    return alg.dim() * alg.dim() - derivation_space(alg).dimension;
}

}  // namespace nilcert

#endif
