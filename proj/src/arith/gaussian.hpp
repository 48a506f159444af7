#ifndef NILCERT_ARITH_GAUSSIAN_HPP
#define NILCERT_ARITH_GAUSSIAN_HPP

#include <complex>
#include <optional>
#include <string>

#include "arith/rational.hpp"

namespace nilcert {

/// Element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(long re) : re_(re) {}                 // NOLINT
    GaussianRational(int re) : re_(re) {}                  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational inverse() const;

    /// Square root in Q(i) when one exists. The root returned has positive real
    /// part, or zero real part and non-negative imaginary part.
    std::optional<GaussianRational> exact_sqrt() const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Text accepted back by the expression parser, e.g. "-1/3", "2*i", "(1/2 + 3*i)".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

inline GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (im_.is_zero()) return {re_.inverse(), Rational(0)};
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

}  // namespace nilcert

#endif
