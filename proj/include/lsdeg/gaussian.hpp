#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <iosfwd>
#include <string>

namespace lsdeg {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

std::string rational_str(const Rational& q);

// Element of Q(i). Components are kept canonical by the GMP backend.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long num, long den) : re_(Rational(num) / Rational(den)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    // Lexicographic on (re, im); only used for ordered containers.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussianRational pow(long e) const;

    // Canonical text: "3", "-1/2", "i", "-2i", "1/2+3/4i". Parses back with parse_gaussian.
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

GaussianRational parse_gaussian(const std::string& text);

}  // namespace lsdeg
