#pragma once

#include "lsdeg/errors.hpp"
#include "lsdeg/gaussian.hpp"
#include "lsdeg/matrix.hpp"
#include "lsdeg/ratfun.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsdeg {

struct SuperDim {
    int m = 0;
    int n = 0;
    int total() const { return m + n; }
    friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

// c[i][j][k]: [e_i,e_j] = c e_k;  rho[i][j][k]: [e_i,f_j] = rho f_k;  gamma[i][j][k]: [f_i,f_j] = gamma e_k.
template <class S>
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(SuperDim d)
        : m_(d.m), n_(d.n), c_(d.m * d.m * d.m, S(0)), rho_(d.m * d.n * d.n, S(0)), gamma_(d.n * d.n * d.m, S(0)) {}

    S& c(int i, int j, int k) { return c_[(i * m_ + j) * m_ + k]; }
    const S& c(int i, int j, int k) const { return c_[(i * m_ + j) * m_ + k]; }
    S& rho(int i, int j, int k) { return rho_[(i * n_ + j) * n_ + k]; }
    const S& rho(int i, int j, int k) const { return rho_[(i * n_ + j) * n_ + k]; }
    S& gamma(int i, int j, int k) { return gamma_[(i * n_ + j) * m_ + k]; }
    const S& gamma(int i, int j, int k) const { return gamma_[(i * n_ + j) * m_ + k]; }

    std::vector<S>& c_data() { return c_; }
    std::vector<S>& rho_data() { return rho_; }
    std::vector<S>& gamma_data() { return gamma_; }
    const std::vector<S>& c_data() const { return c_; }
    const std::vector<S>& rho_data() const { return rho_; }
    const std::vector<S>& gamma_data() const { return gamma_; }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.c_ == b.c_ && a.rho_ == b.rho_ && a.gamma_ == b.gamma_;
    }

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<S> c_, rho_, gamma_;
};

template <class S>
struct Element {
    std::vector<S> even;
    std::vector<S> odd;

    static Element zero(SuperDim d) { return {std::vector<S>(d.m, S(0)), std::vector<S>(d.n, S(0))}; }
    static Element basis(SuperDim d, int idx) {
        Element e = zero(d);
        if (idx < d.m) e.even[idx] = S(1);
        else e.odd[idx - d.m] = S(1);
        return e;
    }
    static Element from_full(SuperDim d, const std::vector<S>& v) {
        Element e;
        e.even.assign(v.begin(), v.begin() + d.m);
        e.odd.assign(v.begin() + d.m, v.end());
        return e;
    }
    std::vector<S> full() const {
        std::vector<S> v = even;
        v.insert(v.end(), odd.begin(), odd.end());
        return v;
    }
    bool is_zero() const {
        for (const auto& x : even)
            if (!lsdeg::is_zero(x)) return false;
        for (const auto& x : odd)
            if (!lsdeg::is_zero(x)) return false;
        return true;
    }
    // 0 or 1 for homogeneous nonzero elements, nullopt otherwise.
    std::optional<int> parity() const {
        bool ev = false, od = false;
        for (const auto& x : even) ev = ev || !lsdeg::is_zero(x);
        for (const auto& x : odd) od = od || !lsdeg::is_zero(x);
        if (ev == od) return std::nullopt;
        return ev ? 0 : 1;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.even == b.even && a.odd == b.odd; }
};

std::string basis_name(SuperDim d, int idx);
// Inverse of basis_name; -1 when the name is not a basis element of d.
int basis_index(SuperDim d, const std::string& name);

template <class S>
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    explicit SuperAlgebra(SuperDim d, std::optional<std::string> label_ = std::nullopt)
        : dim(d), sc(d), label(std::move(label_)) {}

    SuperDim dim;
    StructureConstants<S> sc;
    std::optional<std::string> label;

    int size() const { return dim.total(); }
    int parity(int idx) const { return idx >= dim.m ? 1 : 0; }

    // Coordinates of [b_a, b_b] in the full basis (e_1..e_m, f_1..f_n).
    std::vector<S> product(int a, int b) const {
        const int m = dim.m;
        std::vector<S> v(size(), S(0));
        if (a < m && b < m) {
            for (int k = 0; k < m; ++k) v[k] = sc.c(a, b, k);
        } else if (a < m) {
            for (int k = 0; k < dim.n; ++k) v[m + k] = sc.rho(a, b - m, k);
        } else if (b < m) {
            for (int k = 0; k < dim.n; ++k) v[m + k] = -sc.rho(b, a - m, k);
        } else {
            for (int k = 0; k < m; ++k) v[k] = sc.gamma(a - m, b - m, k);
        }
        return v;
    }

    // Sets [b_a, b_b] = v (full coordinates) together with its (anti)symmetric partner.
    void set_product(int a, int b, const std::vector<S>& v) {
        const int m = dim.m;
        if (static_cast<int>(v.size()) != size()) throw DimensionMismatch("product vector length");
        if (a < m && b < m) {
            for (int k = 0; k < m; ++k) {
                sc.c(a, b, k) = v[k];
                sc.c(b, a, k) = -v[k];
            }
        } else if (a < m) {
            for (int k = 0; k < dim.n; ++k) sc.rho(a, b - m, k) = v[m + k];
        } else if (b < m) {
            for (int k = 0; k < dim.n; ++k) sc.rho(b, a - m, k) = -v[m + k];
        } else {
            for (int k = 0; k < m; ++k) {
                sc.gamma(a - m, b - m, k) = v[k];
                sc.gamma(b - m, a - m, k) = v[k];
            }
        }
    }

    // Flat table T[(a*N + b)*N + k].
    std::vector<S> table() const {
        const int N = size();
        std::vector<S> t(N * N * N, S(0));
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                auto v = product(a, b);
                for (int k = 0; k < N; ++k) t[(a * N + b) * N + k] = std::move(v[k]);
            }
        return t;
    }

    friend bool operator==(const SuperAlgebra& x, const SuperAlgebra& y) { return x.dim == y.dim && x.sc == y.sc; }
    friend bool operator!=(const SuperAlgebra& x, const SuperAlgebra& y) { return !(x == y); }
};

using Algebra = SuperAlgebra<GaussianRational>;
using AlgebraT = SuperAlgebra<RatFun>;

template <class T, class S, class F>
SuperAlgebra<T> map_scalars(const SuperAlgebra<S>& a, F f) {
    SuperAlgebra<T> out(a.dim, a.label);
    auto copy = [&](const std::vector<S>& src, std::vector<T>& dst) {
        for (size_t i = 0; i < src.size(); ++i) dst[i] = f(src[i]);
    };
    copy(a.sc.c_data(), out.sc.c_data());
    copy(a.sc.rho_data(), out.sc.rho_data());
    copy(a.sc.gamma_data(), out.sc.gamma_data());
    return out;
}

inline AlgebraT to_ratfun(const Algebra& a) {
    return map_scalars<RatFun>(a, [](const GaussianRational& z) { return RatFun(z); });
}

struct Violation {
    std::string kind;  // "antisymmetry", "symmetry", "jacobi"
    std::vector<int> basis;
    std::string detail;
};

struct ValidityReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

template <class S>
std::vector<S> bracket_full(const SuperAlgebra<S>& a, const std::vector<S>& x, const std::vector<S>& y) {
    const int N = a.size();
    if (static_cast<int>(x.size()) != N || static_cast<int>(y.size()) != N) throw DimensionMismatch("bracket operand");
    std::vector<S> out(N, S(0));
    for (int i = 0; i < N; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < N; ++j) {
            if (is_zero(y[j])) continue;
            S xy = x[i] * y[j];
            auto p = a.product(i, j);
            for (int k = 0; k < N; ++k)
                if (!is_zero(p[k])) out[k] += xy * p[k];
        }
    }
    return out;
}

template <class S>
Element<S> bracket(const SuperAlgebra<S>& a, const Element<S>& x, const Element<S>& y) {
    if (static_cast<int>(x.even.size()) != a.dim.m || static_cast<int>(x.odd.size()) != a.dim.n ||
        static_cast<int>(y.even.size()) != a.dim.m || static_cast<int>(y.odd.size()) != a.dim.n)
        throw DimensionMismatch("bracket operand does not match algebra dimension");
    return Element<S>::from_full(a.dim, bracket_full(a, x.full(), y.full()));
}

template <class S>
ValidityReport validate_structure(const SuperAlgebra<S>& a) {
    ValidityReport rep;
    const int m = a.dim.m, n = a.dim.n, N = a.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (a.sc.c(i, j, k) != -a.sc.c(j, i, k))
                    rep.violations.push_back({"antisymmetry", {i, j, k}, "c[" + std::to_string(i + 1) + "][" +
                                              std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]"});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k)
                if (a.sc.gamma(i, j, k) != a.sc.gamma(j, i, k))
                    rep.violations.push_back({"symmetry", {m + i, m + j, k}, "gamma[" + std::to_string(i + 1) + "][" +
                                              std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]"});
    auto T = a.table();
    auto prod = [&](const std::vector<S>& x, int z) {
        std::vector<S> out(N, S(0));
        for (int i = 0; i < N; ++i) {
            if (is_zero(x[i])) continue;
            for (int k = 0; k < N; ++k) {
                const S& t = T[(i * N + z) * N + k];
                if (!is_zero(t)) out[k] += x[i] * t;
            }
        }
        return out;
    };
    auto basis_prod = [&](int x, int y) {
        return std::vector<S>(T.begin() + (x * N + y) * N, T.begin() + (x * N + y + 1) * N);
    };
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            for (int z = 0; z < N; ++z) {
                int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
                auto r1 = prod(basis_prod(x, y), z);
                auto r2 = prod(basis_prod(y, z), x);
                auto r3 = prod(basis_prod(z, x), y);
                bool bad = false;
                for (int k = 0; k < N && !bad; ++k) {
                    S s = (px && pz ? -r1[k] : r1[k]) + (px && py ? -r2[k] : r2[k]) + (py && pz ? -r3[k] : r3[k]);
                    bad = !is_zero(s);
                }
                if (bad)
                    rep.violations.push_back({"jacobi", {x, y, z},
                                              "(" + basis_name(a.dim, x) + "," + basis_name(a.dim, y) + "," +
                                                  basis_name(a.dim, z) + ")"});
            }
    return rep;
}

enum class Functor { A, Ab, F };

std::string functor_name(Functor f);

template <class S>
SuperAlgebra<S> functor_apply(const SuperAlgebra<S>& a, Functor which) {
    SuperAlgebra<S> out = a;
    out.label = functor_name(which) + "(" + a.label.value_or("g") + ")";
    auto clear = [](std::vector<S>& v) {
        for (auto& x : v) x = S(0);
    };
    if (which == Functor::A || which == Functor::Ab) clear(out.sc.rho_data());
    if (which == Functor::A || which == Functor::F) clear(out.sc.gamma_data());
    if (which == Functor::Ab) clear(out.sc.c_data());
    return out;
}

template <class S>
std::pair<int, int> derived_dims(const SuperAlgebra<S>& a) {
    const int m = a.dim.m, n = a.dim.n, N = a.size();
    Matrix<S> ev, od;
    for (int x = 0; x < N; ++x)
        for (int y = x; y < N; ++y) {
            auto p = a.product(x, y);
            if (a.parity(x) == a.parity(y)) ev.append_row(std::vector<S>(p.begin(), p.begin() + m));
            else od.append_row(std::vector<S>(p.begin() + m, p.end()));
        }
    int d0 = m > 0 && ev.rows() > 0 ? static_cast<int>(rank(ev)) : 0;
    int d1 = n > 0 && od.rows() > 0 ? static_cast<int>(rank(od)) : 0;
    return {d0, d1};
}

template <class S>
int gamma_rank(const SuperAlgebra<S>& a) {
    const int m = a.dim.m, n = a.dim.n;
    if (m == 0 || n == 0) return 0;
    Matrix<S> g(m, n * (n + 1) / 2);
    int col = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++col)
            for (int k = 0; k < m; ++k) g(k, col) = a.sc.gamma(i, j, k);
    return static_cast<int>(rank(g));
}

template <class S>
Matrix<S> ad_matrix(const SuperAlgebra<S>& a, const Element<S>& x) {
    if (static_cast<int>(x.even.size()) != a.dim.m || static_cast<int>(x.odd.size()) != a.dim.n)
        throw DimensionMismatch("ad_matrix operand does not match algebra dimension");
    const int N = a.size();
    auto xv = x.full();
    Matrix<S> ad(N, N);
    for (int i = 0; i < N; ++i) {
        if (is_zero(xv[i])) continue;
        for (int b = 0; b < N; ++b) {
            auto p = a.product(i, b);
            for (int k = 0; k < N; ++k)
                if (!is_zero(p[k])) ad(k, b) += xv[i] * p[k];
        }
    }
    return ad;
}

template <class S>
bool is_traceless(const SuperAlgebra<S>& a) {
    const int N = a.size();
    for (int b = 0; b < N; ++b) {
        S tr(0);
        for (int k = 0; k < N; ++k) tr += a.product(b, k)[k];
        if (!is_zero(tr)) return false;
    }
    return true;
}

}  // namespace lsdeg
