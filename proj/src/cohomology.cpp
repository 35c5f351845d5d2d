#include "lsdeg/cohomology.hpp"

#include "lsdeg/expr.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace lsdeg {

namespace {

int par(SuperDim d, int i) { return i >= d.m ? 1 : 0; }

// Sorts args by bubble sort, tracking the super-alternating sign. Returns 0 for a repeated even entry.
int sort_args(SuperDim d, std::vector<int>& xs) {
    int sign = 1;
    for (size_t a = 0; a < xs.size(); ++a)
        for (size_t b = 0; b + 1 < xs.size() - a; ++b)
            if (xs[b] > xs[b + 1]) {
                if (!(par(d, xs[b]) && par(d, xs[b + 1]))) sign = -sign;
                std::swap(xs[b], xs[b + 1]);
            }
    for (size_t a = 0; a + 1 < xs.size(); ++a)
        if (xs[a] == xs[a + 1] && par(d, xs[a]) == 0) return 0;
    return sign;
}

void canonical_tuples(SuperDim d, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x < d.total(); ++x) {
        if (!cur.empty() && cur.back() == x && par(d, x) == 0) continue;
        cur.push_back(x);
        canonical_tuples(d, k, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int CochainSpace::index_of(const std::vector<int>& args, int out) const {
    auto it = std::lower_bound(slots.begin(), slots.end(), std::make_pair(args, out));
    if (it == slots.end() || it->first != args || it->second != out) return -1;
    return static_cast<int>(it - slots.begin());
}

CochainSpace cochain_space(SuperDim d, int degree, int parity) {
    CochainSpace s{d, degree, parity, {}};
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    canonical_tuples(d, degree, 0, cur, tuples);
    for (auto& t : tuples) {
        int p = 0;
        for (int x : t) p += par(d, x);
        for (int o = 0; o < d.total(); ++o)
            if ((p + par(d, o)) % 2 == parity) s.slots.emplace_back(t, o);
    }
    std::sort(s.slots.begin(), s.slots.end());
    return s;
}

Cochain Cochain::zero(SuperDim d, int degree, int parity) {
    return {d, degree, parity, std::vector<GaussianRational>(cochain_space(d, degree, parity).size())};
}

std::vector<GaussianRational> Cochain::evaluate(const std::vector<int>& args) const {
    std::vector<GaussianRational> out(dim.total());
    std::vector<int> xs = args;
    int sign = sort_args(dim, xs);
    if (sign == 0) return out;
    auto sp = cochain_space(dim, degree, parity);
    for (int o = 0; o < dim.total(); ++o) {
        int u = sp.index_of(xs, o);
        if (u >= 0) out[o] = sign > 0 ? coeffs[u] : -coeffs[u];
    }
    return out;
}

bool Cochain::is_zero() const {
    for (auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

Cochain1 cochain1_from_matrix(SuperDim d, const Matrix<GaussianRational>& phi, int parity) {
    if (phi.rows() != static_cast<size_t>(d.total()) || phi.cols() != static_cast<size_t>(d.total()))
        throw DimensionMismatch("1-cochain matrix size");
    Cochain1 c = Cochain1::zero(d, 1, parity);
    auto sp = cochain_space(d, 1, parity);
    for (int o = 0; o < d.total(); ++o)
        for (int x = 0; x < d.total(); ++x) {
            if (phi(o, x).is_zero()) continue;
            int u = sp.index_of({x}, o);
            if (u < 0) throw Error("1-cochain matrix has entries of the wrong parity");
            c.coeffs[u] = phi(o, x);
        }
    return c;
}

Matrix<GaussianRational> differential_matrix(const Algebra& a, int degree, int parity) {
    const SuperDim d = a.dim;
    auto src = cochain_space(d, degree, parity);
    auto dst = cochain_space(d, degree + 1, parity);
    Matrix<GaussianRational> M(dst.size(), src.size());
    // Columns u of src hit by c(args): (u, o, sign).
    auto c_terms = [&](std::vector<int> args, const GaussianRational& f, auto&& emit) {
        int sign = sort_args(d, args);
        if (sign == 0) return;
        for (int o = 0; o < d.total(); ++o) {
            int u = src.index_of(args, o);
            if (u >= 0) emit(u, o, sign > 0 ? f : -f);
        }
    };
    std::vector<std::vector<int>> targets;
    for (auto& [t, _] : dst.slots)
        if (targets.empty() || targets.back() != t) targets.push_back(t);
    for (auto& xs : targets) {
        const int n = static_cast<int>(xs.size());
        auto put = [&](int o, int u, const GaussianRational& v) {
            int row = dst.index_of(xs, o);
            if (row >= 0 && !v.is_zero()) M(row, u) += v;
        };
        for (int i = 0; i < n; ++i) {
            int e = i + par(d, xs[i]) * parity;
            for (int k = 0; k < i; ++k) e += par(d, xs[i]) * par(d, xs[k]);
            std::vector<int> rest;
            for (int k = 0; k < n; ++k)
                if (k != i) rest.push_back(xs[k]);
            c_terms(rest, GaussianRational(e % 2 ? -1 : 1), [&](int u, int o, const GaussianRational& f) {
                auto w = a.product(xs[i], o);
                for (int q = 0; q < d.total(); ++q)
                    if (!w[q].is_zero()) put(q, u, f * w[q]);
            });
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int e = j;
                for (int k = i + 1; k < j; ++k) e += par(d, xs[j]) * par(d, xs[k]);
                auto b = a.product(xs[i], xs[j]);
                for (int m = 0; m < d.total(); ++m) {
                    if (b[m].is_zero()) continue;
                    std::vector<int> args = xs;
                    args[i] = m;
                    args.erase(args.begin() + j);
                    GaussianRational f = e % 2 ? -b[m] : b[m];
                    c_terms(args, f, [&](int u, int o, const GaussianRational& g) { put(o, u, g); });
                }
            }
    }
    return M;
}

Cochain differential(const Algebra& a, const Cochain& c) {
    if (c.dim != a.dim) throw DimensionMismatch("cochain dimension");
    auto M = differential_matrix(a, c.degree, c.parity);
    Cochain out{a.dim, c.degree + 1, c.parity, M.apply(c.coeffs)};
    return out;
}

Cochain d1(const Algebra& a, const Cochain1& phi) {
    if (phi.degree != 1) throw Error("d1 expects a 1-cochain");
    return differential(a, phi);
}

Cochain d2(const Algebra& a, const Cochain2& c) {
    if (c.degree != 2) throw Error("d2 expects a 2-cochain");
    return differential(a, c);
}

H2Result h2_dims(const Algebra& a) {
    H2Result r;
    for (int p = 0; p < 2; ++p) {
        auto D1 = differential_matrix(a, 1, p);
        auto D2 = differential_matrix(a, 2, p);
        const size_t n2 = D2.cols();
        r.cochains[p] = static_cast<int>(n2);
        // Image of d1 first, then cocycles; the extra pivots give a complement.
        std::vector<std::vector<GaussianRational>> vecs;
        for (size_t c = 0; c < D1.cols(); ++c) {
            std::vector<GaussianRational> v(n2);
            for (size_t k = 0; k < n2; ++k) v[k] = D1(k, c);
            vecs.push_back(std::move(v));
        }
        const size_t n_image = vecs.size();
        auto z = nullspace(D2);
        for (auto& v : z) vecs.push_back(v);
        // Pivots of the transposed matrix (columns = vectors) pick independent vectors in order.
        Matrix<GaussianRational> Tt(n2, vecs.size());
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t k = 0; k < n2; ++k) Tt(k, i) = vecs[i][k];
        auto piv = rref(Tt);
        int rank_d1 = 0;
        std::vector<Cochain2> basis;
        for (size_t c : piv) {
            if (c < n_image) ++rank_d1;
            else basis.push_back({a.dim, 2, p, vecs[c]});
        }
        r.rank_d1[p] = rank_d1;
        r.rank_d2[p] = static_cast<int>(n2 - z.size());
        (p == 0 ? r.dim_even : r.dim_odd) = static_cast<int>(basis.size());
        (p == 0 ? r.basis_even : r.basis_odd) = std::move(basis);
    }
    return r;
}

bool rigid_sufficient(const Algebra& a) { return h2_dims(a).dim_even == 0; }

bool is_cocycle(const Algebra& a, const Cochain2& c) { return d2(a, c).is_zero(); }

bool is_coboundary(const Algebra& a, const Cochain2& c) {
    auto D1 = differential_matrix(a, 1, c.parity);
    Matrix<GaussianRational> aug(D1.rows(), D1.cols() + 1);
    for (size_t i = 0; i < D1.rows(); ++i) {
        for (size_t j = 0; j < D1.cols(); ++j) aug(i, j) = D1(i, j);
        aug(i, D1.cols()) = c.coeffs[i];
    }
    return rank(aug) == rank(D1);
}

std::string wedge_str(const Cochain2& c) {
    auto sp = cochain_space(c.dim, 2, c.parity);
    std::string out;
    for (size_t u = 0; u < sp.size(); ++u) {
        if (c.coeffs[u].is_zero()) continue;
        auto& [args, o] = sp.slots[u];
        GaussianRational v = c.coeffs[u];
        const bool mixed = par(c.dim, args[0]) != par(c.dim, args[1]);
        if (mixed) v = -v;
        std::string coeff = v.str();
        bool neg = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
        if (neg) coeff = coeff.substr(1);
        if (coeff.find_first_of("+-", 1) != std::string::npos) coeff = "(" + coeff + ")";
        std::string term = (coeff == "1" ? "" : coeff + " ") + basis_name(c.dim, args[0]) + "^" +
                           basis_name(c.dim, args[1]) + " (x) " + basis_name(c.dim, o);
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Cochain2 parse_wedge(const std::string& text, SuperDim d) {
    static const std::regex term_re(R"(^\s*(.*?)\s*([ef]\d+)\s*\^\s*([ef]\d+)\s*\(x\)\s*([ef]\d+)\s*$)");
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && cur.find("(x)") != std::string::npos) {
            terms.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    if (!trim(cur).empty()) terms.push_back(cur);
    std::vector<std::tuple<std::vector<int>, int, GaussianRational>> parsed;
    int parity = -1;
    ExprEnv env;
    for (auto& t : terms) {
        std::smatch mt;
        if (!std::regex_match(t, mt, term_re)) throw ParseError("malformed cochain term '" + trim(t) + "'", 1, 1);
        std::string cs = trim(std::string(mt[1]));
        GaussianRational coeff(1);
        if (cs == "-") coeff = GaussianRational(-1);
        else if (cs == "+" || cs.empty()) coeff = GaussianRational(1);
        else {
            RatFun r = parse_scalar(cs, env);
            if (!r.is_constant()) throw ParseError("cochain coefficient must be constant", 1, 1);
            coeff = r.constant_value();
        }
        int x = basis_index(d, mt[2]), y = basis_index(d, mt[3]), o = basis_index(d, mt[4]);
        if (x < 0 || y < 0 || o < 0) throw ParseError("unknown basis element in '" + trim(t) + "'", 1, 1);
        std::vector<int> args = {x, y};
        if (par(d, x) != par(d, y)) std::swap(args[0], args[1]);
        int p = (par(d, x) + par(d, y) + par(d, o)) % 2;
        if (parity >= 0 && p != parity) throw ParseError("cochain terms of mixed parity", 1, 1);
        parity = p;
        parsed.emplace_back(args, o, coeff);
    }
    if (parity < 0) parity = 0;
    Cochain2 c = Cochain2::zero(d, 2, parity);
    auto sp = cochain_space(d, 2, parity);
    for (auto& [args, o, coeff] : parsed) {
        std::vector<int> xs = args;
        int sign = sort_args(d, xs);
        if (sign == 0) throw ParseError("repeated even argument", 1, 1);
        int u = sp.index_of(xs, o);
        if (sign > 0) c.coeffs[u] += coeff;
        else c.coeffs[u] -= coeff;
    }
    return c;
}

}  // namespace lsdeg
