#ifndef NILCERT_ARITH_RATIONAL_FUNCTION_HPP
#define NILCERT_ARITH_RATIONAL_FUNCTION_HPP

#include <complex>
#include <optional>
#include <string>

#include "arith/polynomial.hpp"

namespace nilcert {

/// Element of Q(i)(t) as a reduced fraction with monic denominator. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(GaussianRational(1)) {}
    RationalFunction(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(GaussianRational(c)) {}                    // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(GaussianRational(1)) {}       // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction t() { return RationalFunction(Polynomial::t()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Constant value; only meaningful when is_constant().
    GaussianRational constant() const { return num_.coeff(0); }

    /// ord_t(num) - ord_t(den); requires a nonzero value.
    long order_at_zero() const { return num_.order_at_zero() - den_.order_at_zero(); }
    /// Coefficient of the lowest-order term of the Laurent expansion at 0.
    GaussianRational leading_coefficient_at_zero() const;
    /// Value at t = 0; requires order_at_zero() >= 0 (returns 0 for positive order).
    GaussianRational value_at_zero() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;

    /// Square root in Q(i)(t) when this is a perfect square.
    std::optional<RationalFunction> exact_sqrt() const;

    std::complex<double> evaluate(std::complex<double> t) const { return num_.evaluate(t) / den_.evaluate(t); }

    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

RationalFunction pow(const RationalFunction& x, long e);

}  // namespace nilcert

#endif
