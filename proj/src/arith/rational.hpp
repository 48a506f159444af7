#ifndef NILCERT_ARITH_RATIONAL_HPP
#define NILCERT_ARITH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "errors.hpp"

namespace nilcert {

/// Exact rational number, always in lowest terms with a positive denominator.
/// Values whose numerator and denominator fit in 63 bits are kept inline;
/// anything larger moves to a GMP rational and moves back when it shrinks.
class Rational {
public:
    Rational() = default;
    Rational(long value);  // NOLINT: implicit from integers is intended
    Rational(int value) : Rational(static_cast<long>(value)) {}  // NOLINT
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) { assign(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational from_string(const std::string& text);

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (!a.big_ || !b.big_) return false;  // representations are canonical
        return *a.big_ == *b.big_;
    }
    friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    double to_double() const;
    std::string to_string() const;

private:
    void assign(const mpq_class& q);  // canonical q; demotes when it fits

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace nilcert

#endif
