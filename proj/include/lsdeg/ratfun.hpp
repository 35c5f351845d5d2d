#pragma once

#include "lsdeg/poly.hpp"

#include <limits>
#include <optional>
#include <string>

namespace lsdeg {

// Element of Q(i)(t): num/den with gcd 1 and monic den.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(const GaussianRational& c) : num_(c), den_(1) {}
    RatFun(const Poly& p) : num_(p), den_(1) {}
    RatFun(const Poly& num, const Poly& den);

    static RatFun var() { return RatFun(Poly::var()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
    GaussianRational constant_value() const { return num_.constant_term(); }

    // +infinity (std::nullopt) for the zero function.
    std::optional<int> valuation_at_zero() const;
    GaussianRational limit_at_zero() const;
    GaussianRational evaluate_at(const GaussianRational& v) const;
    // r(t) -> r(t^k)
    RatFun substitute_power(unsigned k) const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun pow(long e) const;
    RatFun normalized() const { return RatFun(num_, den_); }

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }

}  // namespace lsdeg
