#ifndef NILCERT_ALGEBRA_SUBSPACE_HPP
#define NILCERT_ALGEBRA_SUBSPACE_HPP

#include <vector>

#include "linalg/matrix.hpp"

namespace nilcert {

/// Subspace of F^n held as the nonzero rows of its reduced echelon basis, so
/// equal subspaces have identical representations.
template <class F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        s.set_from(Matrix<F>::from_rows(vectors, ambient));
        return s;
    }

    static Subspace whole(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix<F>::identity(ambient);
        return s;
    }

    /// <e_p, ..., e_n> for 1-based p; p = n + 1 gives the zero subspace.
    static Subspace flag(std::size_t ambient, std::size_t p) {
        if (p == 0 || p > ambient + 1) throw Error(ErrorKind::InvalidArgument, "flag index out of range");
        Subspace s(ambient);
        s.basis_ = Matrix<F>(ambient + 1 - p, ambient);
        for (std::size_t r = 0; r + p <= ambient; ++r) s.basis_(r, p - 1 + r) = F(1);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix<F>& basis() const { return basis_; }
    std::vector<std::vector<F>> vectors() const {
        std::vector<std::vector<F>> out;
        for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row_vector(r));
        return out;
    }

    bool contains(const std::vector<F>& v) const {
        if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
        return (*this + span(ambient_, {v})).dim() == dim();
    }

    bool is_subspace_of(const Subspace& other) const { return (*this + other).dim() == other.dim(); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Matrix<F> stacked(a.dim() + b.dim(), a.ambient_);
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t j = 0; j < a.ambient_; ++j) stacked(r, j) = a.basis_(r, j);
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t j = 0; j < b.ambient_; ++j) stacked(a.dim() + r, j) = b.basis_(r, j);
        Subspace s(a.ambient_);
        s.set_from(std::move(stacked));
        return s;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    void set_from(Matrix<F> m) {
        Echelon<F> e = reduced_row_echelon(std::move(m));
        basis_ = Matrix<F>(e.rank(), ambient_);
        for (std::size_t r = 0; r < e.rank(); ++r)
            for (std::size_t j = 0; j < ambient_; ++j) basis_(r, j) = e.matrix(r, j);
    }

    std::size_t ambient_;
    Matrix<F> basis_;
};

}  // namespace nilcert

#endif
