#include "lsdeg/ratfun.hpp"

#include "lsdeg/errors.hpp"

#include <algorithm>

namespace lsdeg {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.terms().size() == 1) {
        // monomial denominator: only a power of t can cancel
        unsigned k = den_.terms().begin()->first;
        unsigned common = std::min<unsigned>(k, static_cast<unsigned>(num_.valuation()));
        GaussianRational lc = den_.leading();
        num_ = num_.shift_down(common).scaled(lc.inverse());
        den_ = Poly::monomial(GaussianRational(1), k - common);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    GaussianRational lc = den_.leading();
    if (lc != GaussianRational(1)) {
        GaussianRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<int> RatFun::valuation_at_zero() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.valuation() - den_.valuation();
}

GaussianRational RatFun::limit_at_zero() const {
    auto v = valuation_at_zero();
    if (!v) return GaussianRational(0);
    if (*v < 0) throw PoleAtZero("pole of order " + std::to_string(-*v) + " at t = 0 in " + str());
    if (*v > 0) return GaussianRational(0);
    // den(0) may vanish only together with num(0); reduced form excludes that, so both valuations are 0.
    return num_.constant_term() / den_.constant_term();
}

GaussianRational RatFun::evaluate_at(const GaussianRational& v) const {
    GaussianRational d = den_.evaluate(v);
    if (d.is_zero()) throw EvalAtPole("denominator of " + str() + " vanishes at " + v.str());
    return num_.evaluate(v) / d;
}

RatFun RatFun::substitute_power(unsigned k) const {
    RatFun r;
    r.num_ = num_.substitute_power(k);
    r.den_ = den_.substitute_power(k);
    return r;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return *this;
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return (RatFun(1) / *this).pow(-e);
    RatFun result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == Poly(1)) return num_.str(var);
    auto wrap = [&](const Poly& p) {
        std::string s = p.str(var);
        if (p.terms().size() > 1 || s.find('/') != std::string::npos ||
            (!p.is_constant() && !p.leading().is_real()))
            return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace lsdeg
