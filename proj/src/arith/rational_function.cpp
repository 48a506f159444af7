#include "arith/rational_function.hpp"

namespace nilcert {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    if (!den_.is_monic()) {
        GaussianRational scale = den_.leading().inverse();
        num_ *= scale;
        den_ *= scale;
    }
}

GaussianRational RationalFunction::leading_coefficient_at_zero() const {
    if (is_zero()) return {};
    return num_.coeff(static_cast<std::size_t>(num_.order_at_zero())) /
           den_.coeff(static_cast<std::size_t>(den_.order_at_zero()));
}

GaussianRational RationalFunction::value_at_zero() const {
    if (is_zero() || order_at_zero() > 0) return {};
    if (order_at_zero() < 0) throw Error(ErrorKind::DivisionByZero, "pole at t = 0");
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = Polynomial(GaussianRational(1));
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    const bool both_polynomial = den_.is_one() && o.den_.is_one();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!both_polynomial) normalize();
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    GaussianRational scale = r.den_.leading().inverse();
    r.num_ *= scale;
    r.den_ *= scale;
    return r;
}

std::optional<RationalFunction> RationalFunction::exact_sqrt() const {
    // N/D = (N*D)/D^2
    auto root = (num_ * den_).exact_sqrt();
    if (!root) return std::nullopt;
    return RationalFunction(*root, den_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction pow(const RationalFunction& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    RationalFunction result(1);
    RationalFunction base = x;
    auto n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return result;
}

}  // namespace nilcert
