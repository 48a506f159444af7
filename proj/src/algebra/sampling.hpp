#ifndef NILCERT_ALGEBRA_SAMPLING_HPP
#define NILCERT_ALGEBRA_SAMPLING_HPP

#include <random>

#include "arith/gaussian.hpp"
#include "linalg/matrix.hpp"

namespace nilcert {

using Rng = std::mt19937_64;

/// Uniform over {-2,...,2} + i*{-1,0,1}.
inline GaussianRational sample_small_gaussian(Rng& rng) {
    std::uniform_int_distribution<long> re(-2, 2);
    std::uniform_int_distribution<long> im(-1, 1);
    long a = re(rng);
    long b = im(rng);
    return {Rational(a), Rational(b)};
}

/// Small integer entries in [-range, range]; used where real matrices are wanted.
inline Rational sample_small_integer(Rng& rng, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    return Rational(d(rng));
}

/// Random invertible matrix with small Gaussian entries, rejection on det = 0.
inline Matrix<GaussianRational> random_invertible(std::size_t n, Rng& rng) {
    while (true) {
        Matrix<GaussianRational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = sample_small_gaussian(rng);
        if (!determinant(m).is_zero()) return m;
    }
}

/// Basis matrix (rows = new basis vectors) of a random element of the Borel
/// subgroup stabilising the flag A_1 > A_2 > ... > A_n. As a map g acting on
/// coordinate columns g is lower triangular, so g(e_j) lies in <e_j,...,e_n>;
/// the rows g(e_j) therefore form an upper-triangular matrix.
inline Matrix<GaussianRational> random_borel_basis(std::size_t n, Rng& rng) {
    Matrix<GaussianRational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational d;
        do d = sample_small_gaussian(rng);
        while (d.is_zero());
        m(i, i) = d;
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = sample_small_gaussian(rng);
    }
    return m;
}

}  // namespace nilcert

#endif
