#pragma once

#include "lsdeg/gaussian.hpp"

#include <map>
#include <string>
#include <utility>

namespace lsdeg {

// Univariate polynomial over Q(i), sparse by exponent. Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<unsigned, GaussianRational>;

    Poly() = default;
    Poly(const GaussianRational& c);
    Poly(long c) : Poly(GaussianRational(c)) {}
    static Poly monomial(const GaussianRational& c, unsigned e);
    static Poly var() { return monomial(GaussianRational(1), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    // Least exponent with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first); }
    GaussianRational coeff(unsigned e) const;
    GaussianRational leading() const;
    GaussianRational constant_term() const { return coeff(0); }

    GaussianRational evaluate(const GaussianRational& v) const;
    // p(t) -> p(t^k)
    Poly substitute_power(unsigned k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly scaled(const GaussianRational& c) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; throws DivisionByZero for b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    Poly monic() const;
    // Divides out t^k exactly (requires k <= valuation).
    Poly shift_down(unsigned k) const;

    std::string str(const std::string& var = "t") const;

private:
    void add_term(unsigned e, const GaussianRational& c);
    Terms terms_;
};

Poly gcd(Poly a, Poly b);

}  // namespace lsdeg
