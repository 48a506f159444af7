#include "arith/tower.hpp"

#include <limits>

namespace nilcert {

double HalfIntOrder::to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : static_cast<double>(halves_) / 2.0;
}

std::string HalfIntOrder::to_string() const {
    if (infinite_) return "inf";
    if (halves_ % 2 == 0) return std::to_string(halves_ / 2);
    return std::to_string(halves_) + "/2";
}

TowerElement::TowerElement(RationalFunction base, RationalFunction radical, Radicand radicand)
    : base_(std::move(base)), radical_(std::move(radical)), radicand_(std::move(radicand)) {
    if (radical_.is_zero() || !radicand_) {
        if (!radical_.is_zero()) throw Error(ErrorKind::InvalidArgument, "radical part without radicand");
        radicand_.reset();
        return;
    }
    if (auto root = radicand_->exact_sqrt()) {
        base_ += radical_ * *root;
        radical_ = RationalFunction();
        radicand_.reset();
    }
}

TowerElement TowerElement::sqrt_of(const RationalFunction& radicand) {
    return TowerElement(RationalFunction(), RationalFunction(1), std::make_shared<const RationalFunction>(radicand));
}

void TowerElement::adopt_radicand(const TowerElement& o) {
    if (!o.radicand_) return;
    if (!radicand_) {
        radicand_ = o.radicand_;
        return;
    }
    if (radicand_ != o.radicand_ && !(*radicand_ == *o.radicand_))
        throw Error(ErrorKind::MultipleRadicals, "elements from different radical extensions: sqrt(" +
                                                     radicand_->to_string() + ") and sqrt(" +
                                                     o.radicand_->to_string() + ")");
}

TowerElement TowerElement::operator-() const {
    TowerElement r = *this;
    r.base_ = -r.base_;
    r.radical_ = -r.radical_;
    return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
    adopt_radicand(o);
    base_ += o.base_;
    if (o.has_radical()) radical_ += o.radical_;
    if (radical_.is_zero()) radicand_.reset();
    return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
    adopt_radicand(o);
    base_ -= o.base_;
    if (o.has_radical()) radical_ -= o.radical_;
    if (radical_.is_zero()) radicand_.reset();
    return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) {
    adopt_radicand(o);
    if (!has_radical() && !o.has_radical()) {
        base_ *= o.base_;
        return *this;
    }
    // (a + b s)(c + d s) = (ac + bd r) + (ad + bc) s
    RationalFunction base = base_ * o.base_;
    if (has_radical() && o.has_radical()) base += radical_ * o.radical_ * *radicand_;
    RationalFunction radical = base_ * o.radical_ + radical_ * o.base_;
    base_ = std::move(base);
    radical_ = std::move(radical);
    if (radical_.is_zero()) radicand_.reset();
    return *this;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    if (!(a.base_ == b.base_) || !(a.radical_ == b.radical_)) return false;
    if (!a.has_radical()) return true;
    return a.radicand_ == b.radicand_ || *a.radicand_ == *b.radicand_;
}

RationalFunction TowerElement::norm() const {
    if (!has_radical()) return base_ * base_;
    return base_ * base_ - radical_ * radical_ * *radicand_;
}

TowerElement TowerElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!has_radical()) return TowerElement(base_.inverse());
    // 1/(a + b s) = (a - b s)/(a^2 - b^2 r); the norm is nonzero since r is not a square.
    RationalFunction n_inv = norm().inverse();
    TowerElement r;
    r.base_ = base_ * n_inv;
    r.radical_ = -(radical_ * n_inv);
    r.radicand_ = radicand_;
    return r;
}

HalfIntOrder TowerElement::order_at_zero() const {
    HalfIntOrder ob = base_.is_zero() ? HalfIntOrder::infinite() : HalfIntOrder::from_integer(base_.order_at_zero());
    if (!has_radical()) return ob;
    HalfIntOrder orad =
        HalfIntOrder::from_halves(2 * radical_.order_at_zero() + radicand_->order_at_zero());
    return min(ob, orad);
}

Limit TowerElement::limit_at_zero() const {
    if (is_zero()) return {};
    HalfIntOrder ob = base_.is_zero() ? HalfIntOrder::infinite() : HalfIntOrder::from_integer(base_.order_at_zero());
    HalfIntOrder orad = HalfIntOrder::infinite();
    if (has_radical())
        orad = HalfIntOrder::from_halves(2 * radical_.order_at_zero() + radicand_->order_at_zero());

    if (orad.sign() > 0) {
        if (ob.sign() < 0) return {LimitStatus::Diverges, {}};
        return {LimitStatus::Exists, base_.value_at_zero()};
    }
    // The radical part does not vanish: only a branch-independent divergence is conclusive.
    if (!(ob == orad) && min(ob, orad).sign() < 0) return {LimitStatus::Diverges, {}};
    return {LimitStatus::BranchAmbiguous, {}};
}

std::complex<double> TowerElement::evaluate(std::complex<double> t, int branch) const {
    std::complex<double> v = base_.evaluate(t);
    if (has_radical()) v += static_cast<double>(branch) * radical_.evaluate(t) * std::sqrt(radicand_->evaluate(t));
    return v;
}

std::string TowerElement::to_string() const {
    if (!has_radical()) return base_.to_string();
    std::string rad = "(" + radical_.to_string() + ")*sqrt(" + radicand_->to_string() + ")";
    if (base_.is_zero()) return rad;
    return "(" + base_.to_string() + ") + " + rad;
}

TowerElement pow(const TowerElement& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    TowerElement result(1);
    TowerElement base = x;
    auto n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return result;
}

}  // namespace nilcert
