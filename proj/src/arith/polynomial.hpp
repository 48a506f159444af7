#ifndef NILCERT_ARITH_POLYNOMIAL_HPP
#define NILCERT_ARITH_POLYNOMIAL_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith/gaussian.hpp"

namespace nilcert {

/// Dense univariate polynomial in t over Q(i). Coefficients are stored from
/// the constant term up; the leading coefficient is never zero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(GaussianRational c);  // NOLINT: constants embed implicitly
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    /// c * t^k
    static Polynomial monomial(GaussianRational c, std::size_t k);
    static Polynomial t() { return monomial(GaussianRational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const GaussianRational& leading() const { return coeffs_.back(); }
    GaussianRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational{}; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    /// Multiplicity of t as a factor; undefined (returns -1) for zero.
    long order_at_zero() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial monic() const;
    Polynomial shift_down(std::size_t k) const;  // divide by t^k, k <= order_at_zero

    /// Euclidean division over Q(i).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact quotient; throws if the divisor does not divide.
    Polynomial exact_div(const Polynomial& divisor) const;
    /// lc(d)^(deg - deg d + 1) * this  mod  d, without field division.
    Polynomial pseudo_remainder(const Polynomial& divisor) const;

    /// Scalar making all coefficients Gaussian integers (lcm of denominators).
    Rational denominator_lcm() const;

    std::complex<double> evaluate(std::complex<double> t) const;
    GaussianRational evaluate(const GaussianRational& t) const;

    /// Exact square root when this is the square of a polynomial.
    std::optional<Polynomial> exact_sqrt() const;

    /// Parser-compatible rendering with explicit '*', e.g. "(1/2) + (-3)*t^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Monic greatest common divisor, computed with the subresultant PRS after
/// scaling both inputs to Gaussian-integer coefficients. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace nilcert

#endif
