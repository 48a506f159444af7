#ifndef NILCERT_ALGEBRA_STRUCTURE_TABLE_HPP
#define NILCERT_ALGEBRA_STRUCTURE_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "algebra/subspace.hpp"
#include "linalg/matrix.hpp"

namespace nilcert {

inline constexpr std::size_t kMaxAlgebraDim = 16;

/// Bilinear product on F^n given by e_i e_j = sum_k c(i,j,k) e_k.
/// Indices are 0-based here; files and reports use 1-based names.
template <class F>
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim, F(0)) {
        if (dim == 0 || dim > kMaxAlgebraDim)
            throw Error(ErrorKind::InvalidArgument, "algebra dimension must be in 1.." + std::to_string(kMaxAlgebraDim));
    }

    std::size_t dim() const { return dim_; }

    const F& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, F value) { c_[index(i, j, k)] = std::move(value); }

    std::vector<F> basis_product(std::size_t i, std::size_t j) const {
        return {c_.begin() + static_cast<long>(index(i, j, 0)), c_.begin() + static_cast<long>(index(i, j, 0) + dim_)};
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    template <class G, class Fn>
    StructureTable<G> map(Fn&& fn) const {
        StructureTable<G> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) out.set(i, j, k, fn(at(i, j, k)));
        return out;
    }

    friend bool operator==(const StructureTable& a, const StructureTable& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::InvalidArgument, "structure constant index out of range");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::vector<F> c_;
};

struct IdentityCheck {
    bool commutative = false;
    bool associative = false;
};

template <class F>
std::vector<F> multiply(const StructureTable<F>& alg, std::span<const F> x, std::span<const F> y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length differs from algebra dimension");
    std::vector<F> out(n, F(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            F xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!alg.at(i, j, k).is_zero()) out[k] += xy * alg.at(i, j, k);
        }
    }
    return out;
}

template <class F>
std::vector<F> multiply(const StructureTable<F>& alg, const std::vector<F>& x, const std::vector<F>& y) {
    return multiply(alg, std::span<const F>(x), std::span<const F>(y));
}

template <class F>
bool is_commutative(const StructureTable<F>& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alg.at(i, j, k) == alg.at(j, i, k))) return false;
    return true;
}

/// Associativity is checked on basis triples:
/// sum_m c(i,j,m) c(m,k,p) = sum_m c(j,k,m) c(i,m,p) for all i, j, k, p.
template <class F>
IdentityCheck check_identities(const StructureTable<F>& alg) {
    const std::size_t n = alg.dim();
    IdentityCheck result{is_commutative(alg), true};
    std::vector<F> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t p = 0; p < n; ++p) {
                    lhs[p] = F(0);
                    rhs[p] = F(0);
                }
                for (std::size_t m = 0; m < n; ++m) {
                    const F& a = alg.at(i, j, m);
                    if (!a.is_zero())
                        for (std::size_t p = 0; p < n; ++p)
                            if (!alg.at(m, k, p).is_zero()) lhs[p] += a * alg.at(m, k, p);
                    const F& b = alg.at(j, k, m);
                    if (!b.is_zero())
                        for (std::size_t p = 0; p < n; ++p)
                            if (!alg.at(i, m, p).is_zero()) rhs[p] += b * alg.at(i, m, p);
                }
                if (lhs != rhs) {
                    result.associative = false;
                    return result;
                }
            }
    return result;
}

template <class F>
Subspace<F> subspace_product(const StructureTable<F>& alg, const Subspace<F>& u, const Subspace<F>& w) {
    const std::size_t n = alg.dim();
    if (u.ambient_dim() != n || w.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "subspace of a different space");
    std::vector<std::vector<F>> products;
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < w.dim(); ++b) {
            auto p = multiply(alg, u.basis().row(a), w.basis().row(b));
            bool zero = true;
            for (const auto& x : p) zero = zero && x.is_zero();
            if (!zero) products.push_back(std::move(p));
        }
    return Subspace<F>::span(n, products);
}

/// U^1 = U and U^k = sum over p + q = k of U^p U^q, for k = 1..max_k.
template <class F>
std::vector<Subspace<F>> subspace_powers(const StructureTable<F>& alg, const Subspace<F>& u, std::size_t max_k) {
    std::vector<Subspace<F>> powers{Subspace<F>(alg.dim()), u};
    for (std::size_t k = 2; k <= max_k; ++k) {
        Subspace<F> acc(alg.dim());
        for (std::size_t p = 1; p < k; ++p) acc = acc + subspace_product(alg, powers[p], powers[k - p]);
        powers.push_back(std::move(acc));
    }
    return powers;  // index 0 unused
}

template <class F>
Subspace<F> power_ideal(const StructureTable<F>& alg, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "power index must be at least 1");
    return subspace_powers(alg, Subspace<F>::whole(alg.dim()), k)[k];
}

/// {x : x e_j = e_j x = 0 for all j}
template <class F>
Subspace<F> annihilator(const StructureTable<F>& alg) {
    const std::size_t n = alg.dim();
    Matrix<F> system(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                system((j * n + k), i) = alg.at(i, j, k);
                system(n * n + (j * n + k), i) = alg.at(j, i, k);
            }
    Matrix<F> ker = kernel(system);
    std::vector<std::vector<F>> vecs;
    for (std::size_t r = 0; r < ker.rows(); ++r) vecs.push_back(ker.row_vector(r));
    return Subspace<F>::span(n, vecs);
}

/// Least k with A^k = 0, or nullopt when A^(dim+1) != 0.
template <class F>
std::optional<std::size_t> nilpotency_index(const StructureTable<F>& alg) {
    auto powers = subspace_powers(alg, Subspace<F>::whole(alg.dim()), alg.dim() + 1);
    for (std::size_t k = 1; k < powers.size(); ++k)
        if (powers[k].is_zero()) return k;
    return std::nullopt;
}

/// Structure constants of the same product in the basis formed by the rows of m.
template <class F>
StructureTable<F> change_basis(const StructureTable<F>& alg, const Matrix<F>& m) {
    const std::size_t n = alg.dim();
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "basis matrix shape differs from algebra dimension");
    auto inv = inverse(m);
    if (!inv) throw Error(ErrorKind::Singular, "basis matrix is singular");
    const bool symmetric = is_commutative(alg);
    StructureTable<F> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i && symmetric) {
                for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, out.at(j, i, k));
                continue;
            }
            auto coords = row_times<F>(multiply(alg, m.row(i), m.row(j)), *inv);
            for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, std::move(coords[k]));
        }
    return out;
}

}  // namespace nilcert

#endif
