#include "lsdeg/poly.hpp"

#include "lsdeg/errors.hpp"

namespace lsdeg {

Poly::Poly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(0u, c);
}

Poly Poly::monomial(const GaussianRational& c, unsigned e) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

GaussianRational Poly::coeff(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

GaussianRational Poly::leading() const {
    return terms_.empty() ? GaussianRational(0) : terms_.rbegin()->second;
}

GaussianRational Poly::evaluate(const GaussianRational& v) const {
    GaussianRational acc(0);
    unsigned prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) acc *= v.pow(static_cast<long>(prev - it->first));
        acc += it->second;
        prev = it->first;
        first = false;
    }
    if (!first && prev > 0) acc *= v.pow(static_cast<long>(prev));
    return acc;
}

Poly Poly::substitute_power(unsigned k) const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
    return p;
}

void Poly::add_term(unsigned e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly p;
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    Poly q, r = a;
    const int db = b.degree();
    const GaussianRational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned shift = static_cast<unsigned>(r.degree() - db);
        GaussianRational f = r.leading() / lb;
        q.add_term(shift, f);
        for (const auto& [e, c] : b.terms_) r.add_term(e + shift, -(c * f));
    }
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::shift_down(unsigned k) const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e - k, c);
    return p;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

std::string coeff_text(const GaussianRational& c, bool has_var) {
    if (!has_var) return c.str();
    if (c == GaussianRational(1)) return "";
    if (c == GaussianRational(-1)) return "-";
    if (!c.re().is_zero() && !c.im().is_zero()) return "(" + c.str() + ")";
    return c.str();
}

}  // namespace

std::string Poly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string term = coeff_text(c, e > 0);
        if (e > 0) {
            if (!term.empty() && term.back() == 'i') term += "*";
            term += var;
            if (e > 1) term += "^" + std::to_string(e);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace lsdeg
