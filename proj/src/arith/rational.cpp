#include "arith/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace nilcert {

namespace {

using i64 = std::int64_t;
constexpr i64 kMin = std::numeric_limits<i64>::min();

bool fits(const mpz_class& z) {
    return z.fits_slong_p() && sizeof(long) == sizeof(i64) && z.get_si() != kMin;
}

mpz_class to_mpz(i64 v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Rational::Rational(long value) {
    if (value == kMin) {
        big_ = std::make_unique<mpq_class>(mpz_class(value));
        return;
    }
    num_ = value;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    assign(q);
}

void Rational::assign(const mpq_class& q) {
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(q);
    }
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw SyntaxError("not a rational number: " + text, 0);
    if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    q.canonicalize();
    Rational r;
    r.assign(q);
    return r;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (o.num_ == 0) return *this;
        if (num_ == 0) return *this = o;
        // Knuth: g = gcd(b, d); n = a(d/g) + c(b/g); reduce by gcd(n, g)
        i64 g = std::gcd(den_, o.den_);
        i64 x, y, n;
        if (!__builtin_mul_overflow(num_, o.den_ / g, &x) && !__builtin_mul_overflow(o.num_, den_ / g, &y) &&
            !__builtin_add_overflow(x, y, &n) && n != kMin) {
            if (n == 0) {
                num_ = 0;
                den_ = 1;
                return *this;
            }
            i64 g2 = std::gcd(n, g);
            i64 d;
            if (!__builtin_mul_overflow(den_ / g, o.den_ / g2, &d)) {
                num_ = n / g2;
                den_ = d;
                return *this;
            }
        }
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0) return *this;
        if (o.num_ == 0) return *this = o;
        i64 g1 = std::gcd(num_, o.den_);
        i64 g2 = std::gcd(o.num_, den_);
        i64 n, d;
        if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
            !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) && n != kMin) {
            num_ = n;
            den_ = d;
            return *this;
        }
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Rational r;
    if (big_) {
        mpq_class q = 1 / *big_;
        r.assign(q);
    } else {
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
    }
    return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = numerator(), d = denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rational(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace nilcert
