#include "arith/polynomial.hpp"

#include <algorithm>

namespace nilcert {

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(GaussianRational c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long Polynomial::order_at_zero() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<long>(k);
    return -1;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return Polynomial(b) *= a.coeffs_[0];
    if (b.is_constant()) return Polynomial(a) *= b.coeffs_[0];
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return Polynomial(*this) *= leading().inverse();
}

Polynomial Polynomial::shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    return Polynomial(std::vector<GaussianRational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial{}, *this};
    std::vector<GaussianRational> rem = coeffs_;
    std::vector<GaussianRational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
    const GaussianRational lead_inv = divisor.leading().inverse();
    const std::size_t dd = divisor.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const GaussianRational& top = rem[k + dd];
        if (top.is_zero()) continue;
        GaussianRational q = top * lead_inv;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
        quot[k] = std::move(q);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

Polynomial Polynomial::pseudo_remainder(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
    if (degree() < divisor.degree()) return *this;
    std::vector<GaussianRational> rem = coeffs_;
    const GaussianRational& lead = divisor.leading();
    const std::size_t dd = divisor.coeffs_.size() - 1;
    for (std::size_t top = rem.size(); top-- > dd;) {
        GaussianRational factor = rem[top];
        for (auto& c : rem) c *= lead;
        if (!factor.is_zero())
            for (std::size_t j = 0; j <= dd; ++j) rem[top - dd + j] -= factor * divisor.coeffs_[j];
        rem[top] = GaussianRational{};
    }
    return Polynomial(std::move(rem));
}

Rational Polynomial::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& c : coeffs_) {
        mpz_class d = c.re().denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        d = c.im().denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(l, mpz_class(1));
}

std::complex<double> Polynomial::evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k].to_complex();
    return acc;
}

GaussianRational Polynomial::evaluate(const GaussianRational& t) const {
    GaussianRational acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

std::optional<Polynomial> Polynomial::exact_sqrt() const {
    if (is_zero()) return Polynomial{};
    if (degree() % 2 != 0) return std::nullopt;
    auto top = leading().exact_sqrt();
    if (!top) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(degree() / 2);
    std::vector<GaussianRational> q(m + 1);
    q[m] = *top;
    const GaussianRational twice_top_inv = (GaussianRational(2) * *top).inverse();
    for (std::size_t k = m; k-- > 0;) {
        GaussianRational acc = coeffs_[m + k];
        for (std::size_t j = k + 1; j < m; ++j) acc -= q[j] * q[m + k - j];
        q[k] = acc * twice_top_inv;
    }
    Polynomial root(std::move(q));
    if (root * root == *this) return root;
    return std::nullopt;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs_[k].to_string();
        if (c.front() != '(') c = "(" + c + ")";
        if (k == 0)
            out += c;
        else if (k == 1)
            out += c + "*t";
        else
            out += c + "*t^" + std::to_string(k);
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result(GaussianRational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

namespace {

GaussianRational gpow(const GaussianRational& x, long e) {
    GaussianRational r(1);
    for (long k = 0; k < e; ++k) r *= x;
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(GaussianRational(1));

    Polynomial p = a;
    Polynomial q = b;
    p *= GaussianRational(p.denominator_lcm());
    q *= GaussianRational(q.denominator_lcm());
    if (p.degree() < q.degree()) std::swap(p, q);

    // Subresultant PRS: every division below is exact over Z[i].
    GaussianRational g(1);
    GaussianRational h(1);
    while (true) {
        const long delta = p.degree() - q.degree();
        Polynomial r = p.pseudo_remainder(q);
        if (r.is_zero()) return q.monic();
        if (r.degree() == 0) return Polynomial(GaussianRational(1));
        p = std::move(q);
        r *= (g * gpow(h, delta)).inverse();
        q = std::move(r);
        g = p.leading();
        if (delta != 0) h = gpow(g, delta) / gpow(h, delta - 1);
    }
}

}  // namespace nilcert
