#ifndef NILCERT_ARITH_TOWER_HPP
#define NILCERT_ARITH_TOWER_HPP

#include <complex>
#include <memory>
#include <string>

#include "arith/rational_function.hpp"

namespace nilcert {

/// Order of vanishing at t = 0 in steps of 1/2; +inf only for zero.
class HalfIntOrder {
public:
    static HalfIntOrder infinite() { return HalfIntOrder(0, true); }
    static HalfIntOrder from_halves(long halves) { return HalfIntOrder(halves, false); }
    static HalfIntOrder from_integer(long v) { return HalfIntOrder(2 * v, false); }

    bool is_infinite() const { return infinite_; }
    long halves() const { return halves_; }
    bool is_integer() const { return !infinite_ && halves_ % 2 == 0; }
    int sign() const { return infinite_ ? 1 : (halves_ > 0) - (halves_ < 0); }
    double to_double() const;
    std::string to_string() const;

    friend HalfIntOrder operator+(HalfIntOrder a, HalfIntOrder b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return from_halves(a.halves_ + b.halves_);
    }
    friend bool operator==(HalfIntOrder a, HalfIntOrder b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.halves_ == b.halves_);
    }
    friend bool operator<(HalfIntOrder a, HalfIntOrder b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.halves_ < b.halves_;
    }

private:
    HalfIntOrder(long h, bool inf) : halves_(h), infinite_(inf) {}
    long halves_;
    bool infinite_;
};

inline HalfIntOrder min(HalfIntOrder a, HalfIntOrder b) { return b < a ? b : a; }

enum class LimitStatus { Exists, Diverges, BranchAmbiguous };

struct Limit {
    LimitStatus status = LimitStatus::Exists;
    GaussianRational value;
};

/// Scalar base + radical*s of Q(i)(t)[s]/(s^2 - r) for at most one radicand r.
/// Elements without a radical part carry no radicand; combining elements that
/// carry different radicands is an error. A radicand that is a perfect square
/// collapses into Q(i)(t) on construction.
class TowerElement {
public:
    using Radicand = std::shared_ptr<const RationalFunction>;

    TowerElement() = default;
    TowerElement(RationalFunction base) : base_(std::move(base)) {}       // NOLINT
    TowerElement(GaussianRational c) : base_(std::move(c)) {}             // NOLINT
    TowerElement(long c) : base_(c) {}                                    // NOLINT
    TowerElement(RationalFunction base, RationalFunction radical, Radicand radicand);

    /// The adjoined root s itself, or its collapsed value when r is a square.
    static TowerElement sqrt_of(const RationalFunction& radicand);

    const RationalFunction& base() const { return base_; }
    const RationalFunction& radical() const { return radical_; }
    const Radicand& radicand() const { return radicand_; }
    bool has_radical() const { return !radical_.is_zero(); }

    bool is_zero() const { return base_.is_zero() && radical_.is_zero(); }
    bool is_one() const { return base_.is_one() && radical_.is_zero(); }
    /// True when free of t and of s.
    bool is_constant() const { return !has_radical() && base_.is_constant(); }

    TowerElement operator-() const;
    TowerElement& operator+=(const TowerElement& o);
    TowerElement& operator-=(const TowerElement& o);
    TowerElement& operator*=(const TowerElement& o);
    TowerElement& operator/=(const TowerElement& o) { return *this *= o.inverse(); }

    friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
    friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
    friend TowerElement operator*(TowerElement a, const TowerElement& b) { return a *= b; }
    friend TowerElement operator/(TowerElement a, const TowerElement& b) { return a /= b; }
    friend bool operator==(const TowerElement& a, const TowerElement& b);

    TowerElement inverse() const;
    /// base^2 - radical^2 * r, zero iff the element is zero.
    RationalFunction norm() const;

    /// min of the orders of the two parts, with ord(s) = ord(r)/2. When both
    /// parts have the same integral order their leading terms may cancel for
    /// one branch of s, so the value is then only a lower bound.
    HalfIntOrder order_at_zero() const;

    /// Limit as t -> 0, accepted only when it does not depend on the branch of s.
    Limit limit_at_zero() const;

    /// Numeric value at t using the principal branch of s (times branch = +-1).
    std::complex<double> evaluate(std::complex<double> t, int branch = 1) const;

    /// Parser-compatible text: "<base> + (<radical>)*sqrt(<radicand>)".
    std::string to_string() const;

private:
    void adopt_radicand(const TowerElement& o);
    RationalFunction base_;
    RationalFunction radical_;
    Radicand radicand_;
};

TowerElement pow(const TowerElement& x, long e);

}  // namespace nilcert

#endif
