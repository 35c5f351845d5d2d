#include "lsdeg/algebra_io.hpp"
#include "lsdeg/degeneration.hpp"

#include <algorithm>
#include <numeric>

namespace lsdeg {

namespace {

using G = GaussianRational;

// prod lambda_u^exps[u] = rhs
struct MonoEq {
    std::vector<int> exps;
    G rhs;
};

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    using boost::multiprecision::mpz_int;
    mpz_int n = numerator(q), d = denominator(q);
    mpz_int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn) / Rational(rd);
}

std::optional<G> gaussian_sqrt(const G& z) {
    if (z.is_zero()) return G(0);
    auto r = rational_sqrt(z.norm());
    if (!r) return std::nullopt;
    if (auto x = rational_sqrt((z.re() + *r) / 2); x && !x->is_zero()) return G(*x, z.im() / (2 * *x));
    if (auto y = rational_sqrt((*r - z.re()) / 2); y && !y->is_zero()) return G(z.im() / (2 * *y), *y);
    return std::nullopt;
}

G mono_pow(const G& x, int e) { return e >= 0 ? x.pow(e) : x.inverse().pow(-e); }

std::optional<std::vector<G>> solve(std::vector<MonoEq> eqs, int n) {
    std::vector<MonoEq> live;
    for (auto& e : eqs) {
        if (std::all_of(e.exps.begin(), e.exps.end(), [](int x) { return x == 0; })) {
            if (e.rhs != G(1)) return std::nullopt;
        } else {
            live.push_back(std::move(e));
        }
    }
    if (live.empty()) return std::vector<G>(n, G(1));
    for (size_t q = 0; q < live.size(); ++q)
        for (int v = 0; v < n; ++v) {
            int ev = live[q].exps[v];
            if (ev != 1 && ev != -1) continue;
            // lambda_v = rhs^ev * prod_{u != v} lambda_u^(-e_u ev)
            std::vector<MonoEq> rest;
            for (size_t k = 0; k < live.size(); ++k) {
                if (k == q) continue;
                MonoEq e = live[k];
                int f = e.exps[v];
                if (f) {
                    for (int u = 0; u < n; ++u)
                        if (u != v) e.exps[u] -= f * ev * live[q].exps[u];
                    e.exps[v] = 0;
                    e.rhs /= mono_pow(live[q].rhs, f * ev);
                }
                rest.push_back(std::move(e));
            }
            auto sol = solve(std::move(rest), n);
            if (!sol) return std::nullopt;
            G val = mono_pow(live[q].rhs, ev);
            for (int u = 0; u < n; ++u)
                if (u != v) val *= mono_pow((*sol)[u], -live[q].exps[u] * ev);
            (*sol)[v] = val;
            return sol;
        }
    for (const auto& e : live) {
        int nz = 0, v = -1;
        for (int u = 0; u < n; ++u)
            if (e.exps[u]) ++nz, v = u;
        if (nz != 1 || std::abs(e.exps[v]) != 2) continue;
        auto root = gaussian_sqrt(e.exps[v] > 0 ? e.rhs : e.rhs.inverse());
        if (!root) return std::nullopt;
        for (const G& cand : {*root, -*root}) {
            std::vector<MonoEq> sub = live;
            for (auto& s : sub) {
                s.rhs /= mono_pow(cand, s.exps[v]);
                s.exps[v] = 0;
            }
            if (auto sol = solve(std::move(sub), n)) {
                (*sol)[v] = cand;
                return sol;
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

BasisChange MonomialIso::change(SuperDim d) const {
    Matrix<RatFun> pe(d.m, d.m), po(d.n, d.n);
    for (int i = 0; i < d.total(); ++i) {
        if (i < d.m) pe(perm[i], i) = RatFun(scale[i]);
        else po(perm[i] - d.m, i - d.m) = RatFun(scale[i]);
    }
    return BasisChange{pe, po}.inverse();
}

std::vector<std::string> MonomialIso::columns(SuperDim d) const {
    std::vector<std::string> out;
    for (int i = 0; i < d.total(); ++i) {
        std::vector<G> v(d.total(), G(0));
        v[perm[i]] = scale[i];
        out.push_back(format_combination(d, v));
    }
    return out;
}

std::optional<MonomialIso> monomial_iso_search(const Algebra& a, const Algebra& b) {
    if (a.dim != b.dim) return std::nullopt;
    const SuperDim d = a.dim;
    const int N = d.total();
    std::vector<int> ev(d.m), od(d.n);
    std::iota(ev.begin(), ev.end(), 0);
    std::iota(od.begin(), od.end(), d.m);
    const AlgebraT target = to_ratfun(b);
    do {
        do {
            std::vector<int> perm = ev;
            perm.insert(perm.end(), od.begin(), od.end());
            // coefficient of x_k in [x_i, x_j] is lambda_i lambda_j / lambda_k * A(pi, pj, pk)
            std::vector<MonoEq> eqs;
            bool pattern = true;
            for (int i = 0; i < N && pattern; ++i)
                for (int j = 0; j < N && pattern; ++j) {
                    auto pa = a.product(perm[i], perm[j]);
                    auto pb = b.product(i, j);
                    for (int k = 0; k < N && pattern; ++k) {
                        const G& x = pa[perm[k]];
                        if (x.is_zero() != pb[k].is_zero()) pattern = false;
                        else if (!x.is_zero()) {
                            MonoEq e{std::vector<int>(N, 0), pb[k] / x};
                            ++e.exps[i];
                            ++e.exps[j];
                            --e.exps[k];
                            eqs.push_back(std::move(e));
                        }
                    }
                }
            if (!pattern) continue;
            auto sol = solve(std::move(eqs), N);
            if (!sol) continue;
            MonomialIso iso{perm, *sol};
            if (act(iso.change(d), a) == target) return iso;
        } while (std::next_permutation(od.begin(), od.end()));
    } while (std::next_permutation(ev.begin(), ev.end()));
    return std::nullopt;
}

}  // namespace lsdeg
