#include "lsdeg/gaussian.hpp"

#include "lsdeg/errors.hpp"
#include "lsdeg/expr.hpp"

#include <ostream>

namespace lsdeg {

std::string rational_str(const Rational& q) {
    return q.str();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return rational_str(re_);
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = rational_str(im_) + "i";
    if (re_.is_zero()) return imag;
    if (imag[0] == '-') return rational_str(re_) + imag;
    return rational_str(re_) + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

GaussianRational parse_gaussian(const std::string& text) {
    RatFun r = parse_scalar(text, ExprEnv{});
    if (!r.is_constant()) throw ParseError("expected a constant, got '" + text + "'", 1, 1);
    return r.constant_value();
}

}  // namespace lsdeg
