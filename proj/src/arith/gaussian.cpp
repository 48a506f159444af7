#include "arith/gaussian.hpp"

namespace nilcert {

std::optional<GaussianRational> GaussianRational::exact_sqrt() const {
    if (is_zero()) return GaussianRational{};
    if (im_.is_zero()) {
        if (auto r = re_.exact_sqrt()) return GaussianRational{*r, Rational(0)};
        if (auto r = (-re_).exact_sqrt()) return GaussianRational{Rational(0), *r};
        return std::nullopt;
    }
    // (x + yi)^2 = a + bi  =>  x^2 = (a + |z|)/2, y = b/(2x)
    auto modulus = norm().exact_sqrt();
    if (!modulus) return std::nullopt;
    auto x = ((re_ + *modulus) / Rational(2)).exact_sqrt();
    if (!x || x->is_zero()) return std::nullopt;
    Rational y = im_ / (Rational(2) * *x);
    return GaussianRational{*x, y};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_.is_one())
        imag = "i";
    else if ((-im_).is_one())
        imag = "-i";
    else
        imag = im_.to_string() + "*i";
    if (re_.is_zero()) return imag;
    if (im_.sign() < 0) {
        std::string mag = (-im_).is_one() ? "i" : (-im_).to_string() + "*i";
        return "(" + re_.to_string() + " - " + mag + ")";
    }
    return "(" + re_.to_string() + " + " + imag + ")";
}

}  // namespace nilcert
