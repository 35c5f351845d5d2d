#include "lsdeg/invariants.hpp"

#include <algorithm>
#include <random>

namespace lsdeg {

std::string DerivationQuery::str() const {
    return "(" + alpha.str() + "," + beta.str() + "," + gamma.str() + ")_" + std::to_string(parity);
}

IJGrid default_grid() {
    IJGrid g;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) g.emplace_back(i, j);
    return g;
}

std::vector<DerivationQuery> default_queries() {
    const GaussianRational one(1), zero(0), mone(-1);
    std::vector<DerivationQuery> q{{one, one, one, 0}, {one, one, one, 1}};
    const std::vector<GaussianRational> alphas{one,
                                               GaussianRational(-2),
                                               GaussianRational(-1, 2),
                                               zero,
                                               GaussianRational(2, 3),
                                               mone,
                                               GaussianRational(1, 3),
                                               GaussianRational(3),
                                               GaussianRational(1, 2)};
    for (const auto& a : alphas) q.push_back({a, one, mone, 1});
    q.push_back({one, one, zero, 1});
    q.push_back({GaussianRational(2), one, zero, 1});
    return q;
}

int derivation_dim(const Algebra& a, const DerivationQuery& q) {
    const int N = a.size();
    auto T = a.table();
    auto t = [&](int x, int y, int k) -> const GaussianRational& { return T[(x * N + y) * N + k]; };
    std::vector<std::pair<int, int>> unknowns;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if ((a.parity(r) + a.parity(c)) % 2 == q.parity) unknowns.emplace_back(r, c);
    const size_t U = unknowns.size();
    if (U == 0) return 0;
    Matrix<GaussianRational> M;
    std::vector<GaussianRational> row(U);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const bool flip = q.parity == 1 && a.parity(x) == 1;
            for (int k = 0; k < N; ++k) {
                bool nz = false;
                for (size_t u = 0; u < U; ++u) {
                    auto [r, c] = unknowns[u];
                    GaussianRational v(0);
                    // alpha * D([x,y]) : coefficient of D[r][c] in coordinate k needs r == k
                    if (r == k && !q.alpha.is_zero() && !t(x, y, c).is_zero()) v += q.alpha * t(x, y, c);
                    // beta * [Dx, y] : D x = sum_r D[r][x] b_r
                    if (c == x && !q.beta.is_zero() && !t(r, y, k).is_zero()) {
                        GaussianRational w = q.beta * t(r, y, k);
                        if (flip) v += w;
                        else v -= w;
                    }
                    // gamma * [x, Dy]
                    if (c == y && !q.gamma.is_zero() && !t(x, r, k).is_zero()) v -= q.gamma * t(x, r, k);
                    nz = nz || !v.is_zero();
                    row[u] = std::move(v);
                }
                if (nz) M.append_row(row);
            }
        }
    if (M.rows() == 0) return static_cast<int>(U);
    return static_cast<int>(U - rank(M));
}

int orbit_dim(const Algebra& a) {
    const int m = a.dim.m, n = a.dim.n;
    return m * m + n * n - derivation_dim(a, {GaussianRational(1), GaussianRational(1), GaussianRational(1), 0});
}

namespace {

GaussianRational draw_coordinate(std::mt19937_64& gen) {
    long re = static_cast<long>(gen() % 7) - 3;
    long im = static_cast<long>(gen() % 7) - 3;
    return GaussianRational(Rational(re), Rational(im));
}

Element<GaussianRational> draw_even(const Algebra& a, std::mt19937_64& gen) {
    while (true) {
        auto x = Element<GaussianRational>::zero(a.dim);
        for (auto& c : x.even) c = draw_coordinate(gen);
        if (!x.is_zero() || a.dim.m == 0) return x;
    }
}

}  // namespace

std::map<std::pair<int, int>, IJResult> ij_invariants(const Algebra& a, const IJGrid& grid, int samples,
                                                      std::uint64_t seed) {
    int max_i = 0, max_j = 0;
    for (auto [i, j] : grid) {
        max_i = std::max(max_i, i);
        max_j = std::max(max_j, j);
    }
    std::mt19937_64 gen(seed);
    std::map<std::pair<int, int>, std::optional<GaussianRational>> value;
    std::map<std::pair<int, int>, bool> agree;
    for (int s = 0; s < samples; ++s) {
        auto x = draw_even(a, gen);
        auto y = draw_even(a, gen);
        auto adx = ad_matrix(a, x), ady = ad_matrix(a, y);
        std::vector<Matrix<GaussianRational>> X{adx}, Y{ady};
        for (int k = 1; k < max_i; ++k) X.push_back(X.back() * adx);
        for (int k = 1; k < max_j; ++k) Y.push_back(Y.back() * ady);
        for (auto [i, j] : grid) {
            const auto& Xi = X[i - 1];
            const auto& Yj = Y[j - 1];
            GaussianRational num = Xi.trace() * Yj.trace();
            GaussianRational den = (Xi * Yj).trace();
            if (num.is_zero() || den.is_zero()) continue;
            GaussianRational v = num / den;
            auto& slot = value[{i, j}];
            if (!slot) {
                slot = v;
                agree[{i, j}] = true;
            } else if (*slot != v) {
                agree[{i, j}] = false;
            }
        }
    }
    std::map<std::pair<int, int>, IJResult> out;
    for (auto ij : grid) {
        auto it = value.find(ij);
        out[ij] = it != value.end() && it->second && agree[ij] ? IJResult::of(*it->second) : IJResult::not_defined();
    }
    return out;
}

IJResult ij_invariant(const Algebra& a, int i, int j, int samples, std::uint64_t seed) {
    if (i < 1 || j < 1) throw Error("ij invariant needs positive exponents");
    return ij_invariants(a, {{i, j}}, samples, seed).at({i, j});
}

InvariantProfile invariant_profile(const Algebra& a, const IJGrid& grid, const std::vector<DerivationQuery>& queries,
                                   int samples, std::uint64_t seed) {
    InvariantProfile p;
    p.orbit_dim = orbit_dim(a);
    p.gamma_rank = gamma_rank(a);
    p.derived = derived_dims(a);
    p.traceless = is_traceless(a);
    p.ij = ij_invariants(a, grid, samples, seed);
    for (const auto& q : queries) p.derivation_dims[q] = derivation_dim(a, q);
    return p;
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::OrbitDim: return "OrbitDim";
        case Rule::GammaVanishing: return "GammaVanishing";
        case Rule::DerivedDims: return "DerivedDims";
        case Rule::DerivationDims: return "DerivationDims";
        case Rule::Traceless: return "Traceless";
        case Rule::IJInvariant: return "IJInvariant";
        case Rule::FunctorRecursion: return "FunctorRecursion";
    }
    return "?";
}

std::string NondegenerationCertificate::label() const {
    switch (rule) {
        case Rule::DerivationDims: return "DerivationDims" + query->str();
        case Rule::DerivedDims: return "DerivedDims[" + std::to_string(parity) + "]";
        case Rule::IJInvariant: return "IJInvariant(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
        case Rule::FunctorRecursion: return "FunctorRecursion(" + functor_name(*functor) + ", " + inner->label() + ")";
        default: return rule_name(rule);
    }
}

AlgebraInfo::AlgebraInfo(Algebra a, const CertifierConfig& cfg) : a_(std::move(a)), cfg_(cfg) {}

int AlgebraInfo::orbit_dim() {
    if (!orbit_) orbit_ = lsdeg::orbit_dim(a_);
    return *orbit_;
}

int AlgebraInfo::gamma_rank() {
    if (!gamma_rank_) gamma_rank_ = lsdeg::gamma_rank(a_);
    return *gamma_rank_;
}

std::pair<int, int> AlgebraInfo::derived() {
    if (!derived_) derived_ = derived_dims(a_);
    return *derived_;
}

bool AlgebraInfo::traceless() {
    if (!traceless_) traceless_ = is_traceless(a_);
    return *traceless_;
}

IJResult AlgebraInfo::ij(int i, int j) {
    auto it = ij_.find({i, j});
    if (it != ij_.end()) return it->second;
    if (ij_.empty()) ij_ = ij_invariants(a_, cfg_.grid, cfg_.samples, cfg_.seed);
    it = ij_.find({i, j});
    if (it != ij_.end()) return it->second;
    IJResult r = ij_invariant(a_, i, j, cfg_.samples, cfg_.seed);
    ij_.emplace(std::make_pair(i, j), r);
    return r;
}

int AlgebraInfo::derivation(const DerivationQuery& q) {
    auto it = der_.find(q);
    if (it != der_.end()) return it->second;
    int d = derivation_dim(a_, q);
    der_.emplace(q, d);
    return d;
}

AlgebraInfo& AlgebraInfo::functor(Functor f) {
    auto& slot = functors_[static_cast<int>(f)];
    if (!slot) slot = std::make_unique<AlgebraInfo>(functor_apply(a_, f), cfg_);
    return *slot;
}

std::optional<std::string> AlgebraInfo::separating_invariant(AlgebraInfo& o, int depth) {
    if (orbit_dim() != o.orbit_dim()) return "orbit dimension";
    if (gamma_rank() != o.gamma_rank()) return "rank of Gamma";
    if (derived() != o.derived()) return "derived dimensions";
    if (traceless() != o.traceless()) return "tracelessness";
    for (const auto& q : cfg_.queries)
        if (derivation(q) != o.derivation(q)) return "dim D" + q.str();
    for (auto [i, j] : cfg_.grid)
        if (ij(i, j) != o.ij(i, j)) return "(" + std::to_string(i) + "," + std::to_string(j) + ")-invariant";
    if (depth > 0)
        for (Functor f : {Functor::A, Functor::Ab, Functor::F})
            if (auto s = functor(f).separating_invariant(o.functor(f), depth - 1)) return *s + " of " + functor_name(f);
    return std::nullopt;
}

namespace {

std::string pair_str(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

std::optional<NondegenerationCertificate> certify(AlgebraInfo& g, AlgebraInfo& h, int depth,
                                                  const std::vector<DerivationQuery>& extra_queries) {
    using Cert = NondegenerationCertificate;
    const int og = g.orbit_dim(), oh = h.orbit_dim();
    if (og < oh) {
        Cert c;
        c.rule = Rule::OrbitDim;
        c.lhs_value = std::to_string(og);
        c.rhs_value = std::to_string(oh);
        c.human_reason = "dim O(g) = " + c.lhs_value + " < " + c.rhs_value + " = dim O(h)";
        return c;
    }
    if (og == oh && g.algebra() != h.algebra()) {
        if (auto sep = g.separating_invariant(h, 2)) {
            Cert c;
            c.rule = Rule::OrbitDim;
            c.lhs_value = std::to_string(og);
            c.rhs_value = std::to_string(oh);
            c.human_reason = "dim O(g) = dim O(h) = " + c.lhs_value + " while g and h differ in " + *sep;
            return c;
        }
    }
    if (g.gamma_rank() == 0 && h.gamma_rank() > 0) {
        Cert c;
        c.rule = Rule::GammaVanishing;
        c.lhs_value = "0";
        c.rhs_value = std::to_string(h.gamma_rank());
        c.human_reason = "Gamma_g = 0 but rk Gamma_h = " + c.rhs_value;
        return c;
    }
    auto dg = g.derived(), dh = h.derived();
    for (int p = 0; p < 2; ++p) {
        int a = p == 0 ? dg.first : dg.second, b = p == 0 ? dh.first : dh.second;
        if (a < b) {
            Cert c;
            c.rule = Rule::DerivedDims;
            c.parity = p;
            c.lhs_value = pair_str(dg);
            c.rhs_value = pair_str(dh);
            c.human_reason = "dim(g^1)_" + std::to_string(p) + " = " + std::to_string(a) + " < " + std::to_string(b) +
                             " = dim(h^1)_" + std::to_string(p);
            return c;
        }
    }
    std::vector<DerivationQuery> queries = g.config().queries;
    for (const auto& q : extra_queries)
        if (std::find(queries.begin(), queries.end(), q) == queries.end()) queries.push_back(q);
    for (const auto& q : queries) {
        int a = g.derivation(q), b = h.derivation(q);
        if (a > b) {
            Cert c;
            c.rule = Rule::DerivationDims;
            c.query = q;
            c.lhs_value = std::to_string(a);
            c.rhs_value = std::to_string(b);
            c.human_reason = "dim D" + q.str() + "(g) = " + c.lhs_value + " > " + c.rhs_value + " = dim D" + q.str() + "(h)";
            return c;
        }
    }
    if (g.traceless() && !h.traceless()) {
        Cert c;
        c.rule = Rule::Traceless;
        c.lhs_value = "traceless";
        c.rhs_value = "not traceless";
        c.human_reason = "tr ad x = 0 on a basis of g but not of h";
        return c;
    }
    for (auto [i, j] : g.config().grid) {
        IJResult a = g.ij(i, j), b = h.ij(i, j);
        if (a.exists && b.exists && a.value != b.value) {
            Cert c;
            c.rule = Rule::IJInvariant;
            c.ij = {i, j};
            c.lhs_value = a.value.str();
            c.rhs_value = b.value.str();
            c.human_reason = "c_{" + std::to_string(i) + "," + std::to_string(j) + "}(g) = " + c.lhs_value +
                             " != " + c.rhs_value + " = c_{" + std::to_string(i) + "," + std::to_string(j) + "}(h)";
            return c;
        }
    }
    if (depth > 0) {
        for (Functor f : {Functor::A, Functor::Ab, Functor::F}) {
            auto inner = certify(g.functor(f), h.functor(f), depth - 1, extra_queries);
            if (!inner) continue;
            Cert c;
            c.rule = Rule::FunctorRecursion;
            c.functor = f;
            c.lhs_value = inner->lhs_value;
            c.rhs_value = inner->rhs_value;
            c.human_reason = functor_name(f) + "(g) does not degenerate to " + functor_name(f) + "(h): " + inner->human_reason;
            c.inner = std::make_shared<const Cert>(std::move(*inner));
            return c;
        }
    }
    return std::nullopt;
}

std::optional<NondegenerationCertificate> certify_nondegeneration(const Algebra& g, const Algebra& h, int depth,
                                                                  const CertifierConfig& cfg) {
    AlgebraInfo gi(g, cfg), hi(h, cfg);
    return certify(gi, hi, depth);
}

namespace {

bool recheck_info(const NondegenerationCertificate& c, AlgebraInfo& g, AlgebraInfo& h) {
    switch (c.rule) {
        case Rule::OrbitDim: {
            int a = g.orbit_dim(), b = h.orbit_dim();
            if (std::to_string(a) != c.lhs_value || std::to_string(b) != c.rhs_value) return false;
            if (a < b) return true;
            return a == b && g.algebra() != h.algebra() && g.separating_invariant(h, 2).has_value();
        }
        case Rule::GammaVanishing:
            return g.gamma_rank() == 0 && h.gamma_rank() > 0 && std::to_string(h.gamma_rank()) == c.rhs_value;
        case Rule::DerivedDims: {
            auto a = g.derived(), b = h.derived();
            int x = c.parity == 0 ? a.first : a.second, y = c.parity == 0 ? b.first : b.second;
            return pair_str(a) == c.lhs_value && pair_str(b) == c.rhs_value && x < y;
        }
        case Rule::DerivationDims: {
            int a = g.derivation(*c.query), b = h.derivation(*c.query);
            return std::to_string(a) == c.lhs_value && std::to_string(b) == c.rhs_value && a > b;
        }
        case Rule::Traceless:
            return g.traceless() && !h.traceless();
        case Rule::IJInvariant: {
            auto a = g.ij(c.ij.first, c.ij.second), b = h.ij(c.ij.first, c.ij.second);
            return a.exists && b.exists && a.value != b.value && a.value.str() == c.lhs_value &&
                   b.value.str() == c.rhs_value;
        }
        case Rule::FunctorRecursion:
            return c.inner && recheck_info(*c.inner, g.functor(*c.functor), h.functor(*c.functor));
    }
    return false;
}

}  // namespace

bool recheck_certificate(const NondegenerationCertificate& c, const Algebra& g, const Algebra& h,
                         const CertifierConfig& cfg) {
    AlgebraInfo gi(g, cfg), hi(h, cfg);
    return recheck_info(c, gi, hi);
}

}  // namespace lsdeg
