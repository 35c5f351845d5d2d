#include "lsdeg/golden.hpp"

#include "lsdeg/expr.hpp"

#include <functional>

namespace lsdeg {

namespace {

using G = GaussianRational;

bool is(const G& x, long v) { return x == G(v); }
int delta(const G& x, long v) { return is(x, v) ? 1 : 0; }

struct RowSpec {
    int orbit;
    int gamma;
    std::function<std::pair<int, int>(const std::vector<G>&)> derived;
    // Power sums p_k; ij entries follow c_ij = p_i p_j / p_{i+j}.
    std::function<G(const std::vector<G>&, int)> power;
    enum { None, Const, EvenConst, Power } ij = None;
    long constant = 0;
};

std::function<std::pair<int, int>(const std::vector<G>&)> fixed(int a, int b) {
    return [a, b](const std::vector<G>&) { return std::pair{a, b}; };
}

G psum(std::initializer_list<G> base, int k) {
    G s(0);
    for (const auto& x : base) s += x.pow(k);
    return s;
}

const std::map<std::string, RowSpec>& table1_rows() {
    static const std::map<std::string, RowSpec> rows = [] {
        std::map<std::string, RowSpec> r;
        const G half(-1, 2);
        auto none = [&](const char* id, int o, int g, int d0, int d1) { r[id] = {o, g, fixed(d0, d1), {}, RowSpec::None}; };
        auto konst = [&](const char* id, int o, int g, int d0, int d1, long v, bool even) {
            r[id] = {o, g, fixed(d0, d1), {}, even ? RowSpec::EvenConst : RowSpec::Const, v};
        };
        auto power = [&](const char* id, int o, int g, std::function<std::pair<int, int>(const std::vector<G>&)> d,
                         std::function<G(const std::vector<G>&, int)> p) { r[id] = {o, g, d, p, RowSpec::Power}; };
        none("LS1", 6, 2, 2, 0);
        none("LS5", 6, 0, 0, 2);
        konst("LS19", 6, 2, 2, 1, 2, true);
        none("LS4", 5, 2, 2, 0);
        konst("LS7", 5, 1, 1, 2, 2, true);
        konst("LS8", 5, 1, 1, 1, 1, false);
        konst("LS9", 5, 0, 0, 2, 2, false);
        power("LS14", 5, 1, [](auto& s) { return std::pair{1, 2 - delta(s[0], 0) - delta(s[0], -1)}; },
              [](auto& s, int k) { return psum({G(-1), s[0], -s[0] - G(1)}, k); });
        power("LS15", 5, 1, [](auto& s) { return std::pair{1, 2 - delta(s[0], 0)}; },
              [half](auto& s, int k) { return psum({G(-1), s[0], half}, k); });
        power("LS17", 5, 1, fixed(1, 2), [half](auto&, int k) { return psum({G(-1), half, half}, k); });
        power("LS18", 5, 0, [](auto& s) { return std::pair{1, 2 - delta(s[0], -1)}; },
              [](auto& s, int k) { return psum({G(-1), s[0], s[0] + G(1)}, k); });
        none("LS2", 4, 1, 1, 0);
        power("LS6", 4, 0, [](auto& s) { return std::pair{0, 2 - delta(s[0], 0)}; },
              [](auto& s, int k) { return psum({G(1), s[0]}, k); });
        konst("LS10", 4, 0, 0, 2, 2, false);
        none("LS12", 4, 1, 1, 1);
        power("LS13", 4, 0, [](auto& s) { return std::pair{1, 2 - delta(s[0], 0) - delta(s[1], 0)}; },
              [](auto& s, int k) { return psum({G(-1), s[0], s[1]}, k); });
        power("LS15[-1/2]", 4, 1, fixed(1, 2), [half](auto&, int k) { return psum({G(-1), half, half}, k); });
        power("LS16", 4, 0, [](auto& s) { return std::pair{1, 2 - delta(s[0], 0)}; },
              [](auto& s, int k) { return psum({G(-1), s[0], s[0]}, k); });
        none("LS3", 3, 1, 1, 0);
        none("LS11", 3, 0, 0, 1);
        konst("LS6[1]", 2, 0, 0, 2, 2, false);
        power("LS13[a,a]", 2, 0, [](auto& s) { return std::pair{1, 2 - 2 * delta(s[0], 0)}; },
              [](auto& s, int k) { return psum({G(-1), s[0], s[0]}, k); });
        none("LS0", 0, 0, 0, 0);
        return r;
    }();
    return rows;
}

std::string join(const std::string& entry, const std::vector<std::string>& params) {
    if (params.empty()) return entry;
    std::string s = entry + "[";
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + params[i];
    return s + "]";
}

Algebra relabel(const Algebra& a, const std::vector<int>& perm) {
    Algebra out(a.dim, a.label);
    const int N = a.size();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            auto p = a.product(i, j);
            std::vector<G> q(N, G(0));
            for (int k = 0; k < N; ++k) q[perm[k]] = p[k];
            out.set_product(perm[i], perm[j], q);
        }
    return out;
}

}  // namespace

Table1Expectation table1_expectation(const std::string& node, const std::vector<G>& slots, const IJGrid& grid) {
    auto it = table1_rows().find(node);
    if (it == table1_rows().end()) throw Error("no invariants row for " + node);
    const RowSpec& r = it->second;
    Table1Expectation e;
    e.orbit_dim = r.orbit;
    e.gamma_rank = r.gamma;
    e.derived = r.derived(slots);
    for (auto [i, j] : grid) {
        switch (r.ij) {
            case RowSpec::None: e.ij[{i, j}] = std::nullopt; break;
            case RowSpec::Const: e.ij[{i, j}] = G(r.constant); break;
            case RowSpec::EvenConst:
                if (i % 2 == 0 && j % 2 == 0) e.ij[{i, j}] = G(r.constant);
                break;
            case RowSpec::Power: {
                G num = r.power(slots, i) * r.power(slots, j);
                G den = r.power(slots, i + j);
                if (num.is_zero() || den.is_zero()) e.ij[{i, j}] = std::nullopt;
                else e.ij[{i, j}] = num / den;
                break;
            }
        }
    }
    return e;
}

std::vector<std::vector<G>> table1_probes(const std::string& node) {
    if (node == "LS14") return {{G(0)}, {G(-1)}, {G(1)}};
    if (node == "LS15" || node == "LS16" || node == "LS13[a,a]") return {{G(0)}};
    if (node == "LS18") return {{G(-1)}, {G(0)}};
    if (node == "LS6") return {{G(0)}, {G(-1)}};
    if (node == "LS13") return {{G(0), G(3)}, {G(2), G(0)}, {G(0), G(-1)}};
    return {};
}

Table1Check check_table1(const std::string& node, const std::vector<G>& slots, const CertifierConfig& cfg) {
    Table1Check c{node, slots, {}};
    auto exp = table1_expectation(node, slots, cfg.grid);
    Algebra a = catalog_node(node).instantiate(slots);
    auto prof = invariant_profile(a, cfg.grid, {}, cfg.samples, cfg.seed);
    auto pair_str = [](std::pair<int, int> p) {
        return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    };
    if (prof.orbit_dim != exp.orbit_dim)
        c.mismatches.push_back("orbit dim " + std::to_string(prof.orbit_dim) + ", table " + std::to_string(exp.orbit_dim));
    if (prof.gamma_rank != exp.gamma_rank)
        c.mismatches.push_back("gamma rank " + std::to_string(prof.gamma_rank) + ", table " +
                               std::to_string(exp.gamma_rank));
    if (prof.derived != exp.derived)
        c.mismatches.push_back("derived dims " + pair_str(prof.derived) + ", table " + pair_str(exp.derived));
    for (const auto& [ij, want] : exp.ij) {
        const IJResult& got = prof.ij.at(ij);
        bool ok = want ? got.exists && got.value == *want : !got.exists;
        if (!ok)
            c.mismatches.push_back("c" + pair_str(ij) + " " + got.str() + ", table " + (want ? want->str() : "none"));
    }
    return c;
}

std::string Table2Row::g_text() const { return join(g_entry, g_params); }
std::string Table2Row::h_text() const { return join(h_entry, h_params); }
std::string Table2Row::ident_text() const { return join(ident_entry, ident_params); }

const std::vector<Table2Row>& table2_rows() {
    static const std::vector<Table2Row> rows = [] {
        std::vector<Table2Row> r;
        auto der = [&](std::string g, std::vector<std::string> gp, std::string h, std::vector<std::string> hp,
                       std::vector<std::string> q, int gd, std::optional<int> hd) {
            r.push_back({g, gp, h, hp, q, gd, hd, "", "", {}});
        };
        auto fun = [&](std::string g, std::vector<std::string> gp, std::string h, std::vector<std::string> hp,
                       std::string f, std::string ie, std::vector<std::string> ip) {
            r.push_back({g, gp, h, hp, {}, std::nullopt, std::nullopt, f, ie, ip});
        };
        der("LS13", {"1", "1/c"}, "LS13", {"c", "c"}, {"1", "1", "-1"}, 1, 0);
        der("LS13", {"a", "b"}, "LS6", {"1"}, {"1/a", "1", "-1"}, 1, 0);
        der("LS13", {"1", "2"}, "LS13", {"1/2", "1/2"}, {"1", "1", "-1"}, 1, 0);
        der("LS13", {"1", "-2"}, "LS13", {"-1/2", "-1/2"}, {"1", "1", "-1"}, 1, 0);
        der("LS13", {"1", "-1/2"}, "LS13", {"-2", "-2"}, {"1", "1", "-1"}, 1, 0);
        der("LS13", {"a", "-1/2"}, "LS6", {"1"}, {"-2", "1", "-1"}, 1, 0);
        der("LS9", {}, "LS6", {"-1"}, {"1", "1", "0"}, 1, 0);
        fun("LS14", {"a"}, "LS13", {"b", "b+1"}, "F", "LS13", {"a", "-(a+1)"});
        fun("LS14", {"a"}, "LS13", {"b", "-1/2"}, "F", "LS13", {"a", "-(a+1)"});
        fun("LS14", {"a"}, "LS6", {"1"}, "F", "LS13", {"a", "-(a+1)"});
        der("LS14", {"1"}, "LS16", {"-1/2"}, {"-1/2", "1", "-1"}, 1, 0);
        der("LS14", {"1"}, "LS15", {"-1/2"}, {"-1/2", "1", "-1"}, 1, 0);
        der("LS14", {"0"}, "LS6", {"-1"}, {"0", "1", "-1"}, 8, 2);
        fun("LS14", {"-1/2"}, "LS13", {"a", "a+1"}, "F", "LS13", {"-1/2", "-1/2"});
        fun("LS14", {"-1/2"}, "LS13", {"a", "-(a+1)"}, "F", "LS13", {"-1/2", "-1/2"});
        der("LS14", {"-1/2"}, "LS16", {"-1/2"}, {"-2", "1", "-1"}, 2, std::nullopt);
        fun("LS14", {"-1/2"}, "LS11", {}, "F", "LS13", {"-1/2", "-1/2"});
        fun("LS14", {"-1/2"}, "LS12", {}, "F", "LS13", {"-1/2", "-1/2"});
        fun("LS15", {"-1/2"}, "LS11", {}, "F", "LS13", {"-1/2", "-1/2"});
        fun("LS15", {"a"}, "LS2", {}, "ab", "LS3", {});
        fun("LS15", {"a"}, "LS6", {"b"}, "F", "LS13", {"a", "-1/2"});
        fun("LS15", {"a"}, "LS10", {}, "F", "LS13", {"a", "-1/2"});
        fun("LS15", {"a"}, "LS13", {"b", "c"}, "F", "LS13", {"a", "-1/2"});
        fun("LS15", {"a"}, "LS16", {"b"}, "F", "LS13", {"a", "-1/2"});
        fun("LS15", {"a"}, "LS15", {"-1/2"}, "F", "LS13", {"a", "-1/2"});
        fun("LS17", {}, "LS13", {"a", "a+1"}, "F", "LS16", {"-1/2"});
        fun("LS17", {}, "LS13", {"a", "-(a+1)"}, "F", "LS16", {"-1/2"});
        der("LS18", {"-2/3"}, "LS13", {"-3/2", "-1/2"}, {"2/3", "1", "-1"}, 1, 0);
        der("LS18", {"-2"}, "LS13", {"1/2", "-1/2"}, {"-1", "1", "-1"}, 1, 0);
        der("LS18", {"-1/3"}, "LS13", {"3/2", "-1/2"}, {"1/3", "1", "-1"}, 1, 0);
        der("LS18", {"-3"}, "LS13", {"3/2", "-1/2"}, {"3", "1", "-1"}, 1, 0);
        der("LS18", {"1"}, "LS16", {"1/2"}, {"1/2", "1", "-1"}, 1, 0);
        der("LS18", {"1"}, "LS13", {"1/2", "1/2"}, {"1/2", "1", "-1"}, 1, 0);
        der("LS18", {"c/(1-c)"}, "LS13", {"c", "1-c"}, {"1-c", "1", "-1"}, 1, 0);
        der("LS18", {"2/(1-2)"}, "LS13", {"2", "1-2"}, {"2/(2-1)", "1", "0"}, 1, 0);
        der("LS18", {"(1-c)/c"}, "LS13", {"1-c", "c"}, {"c", "1", "-1"}, 1, 0);
        der("LS18", {"(1+1)/(-1)"}, "LS13", {"1+1", "-1"}, {"(-1-1)/(-1)", "1", "0"}, 1, 0);
        der("LS18", {"0"}, "LS6", {"1"}, {"0", "1", "-1"}, 8, 2);
        der("LS18", {"0"}, "LS10", {}, {"0", "1", "-1"}, 8, 2);
        der("LS18", {"a"}, "LS6", {"b"}, {"1", "1", "-1"}, 2, 0);
        return r;
    }();
    return rows;
}

bool equal_up_to_relabel(const Algebra& a, const Algebra& b) {
    if (a.dim != b.dim) return false;
    const int m = a.dim.m, N = a.size();
    std::vector<int> id(N);
    for (int k = 0; k < N; ++k) id[k] = k;
    for (int swap_even = 0; swap_even < (m == 2 ? 2 : 1); ++swap_even)
        for (int swap_odd = 0; swap_odd < (N - m == 2 ? 2 : 1); ++swap_odd) {
            auto p = id;
            if (swap_even) std::swap(p[0], p[1]);
            if (swap_odd) std::swap(p[m], p[m + 1]);
            if (relabel(a, p) == b) return true;
        }
    return false;
}

std::vector<Table2Check> check_table2(std::uint64_t seed, const CertifierConfig& cfg) {
    std::vector<Table2Check> out;
    const auto& rows = table2_rows();
    for (size_t idx = 0; idx < rows.size(); ++idx) {
        const Table2Row& row = rows[idx];
        Table2Check c;
        c.row = &row;
        std::mt19937_64 gen(derive_seed(seed, "table2:" + std::to_string(idx)));
        ExprEnv env;
        for (const char* s : {"a", "b", "c"}) {
            G v = draw_parameter(gen);
            c.values[s] = v;
            env.symbols[s] = RatFun(v);
        }
        auto eval = [&](const std::vector<std::string>& exprs) {
            std::vector<G> v;
            for (const auto& e : exprs) {
                RatFun r = parse_scalar(e, env);
                if (!r.is_constant()) throw Error("non-constant parameter " + e);
                v.push_back(r.constant_value());
            }
            return v;
        };
        Instantiation gi{row.g_entry, eval(row.g_params)}, hi{row.h_entry, eval(row.h_params)};
        c.g_label = gi.label();
        c.h_label = hi.label();
        Algebra g = instantiate(gi.entry, gi.params), h = instantiate(hi.entry, hi.params);
        std::vector<DerivationQuery> extra;
        if (!row.query.empty()) {
            auto q = eval(row.query);
            DerivationQuery dq{q[0], q[1], q[2], 1};
            extra.push_back(dq);
            c.g_dim = derivation_dim(g, dq);
            c.h_dim = derivation_dim(h, dq);
            c.dims_match = c.g_dim == row.g_dim && (!row.h_dim || c.h_dim == row.h_dim);
            if (!c.dims_match)
                c.notes.push_back("D" + dq.str() + ": computed " + std::to_string(*c.g_dim) + " > " +
                                  std::to_string(*c.h_dim) + ", cited " + std::to_string(*row.g_dim) + " > " +
                                  (row.h_dim ? std::to_string(*row.h_dim) : "?"));
        } else {
            Functor f = row.functor == "ab" ? Functor::Ab : Functor::F;
            Algebra fg = functor_apply(g, f);
            Algebra target = instantiate(row.ident_entry, eval(row.ident_params));
            c.identification_ok = equal_up_to_relabel(fg, target);
            if (!c.identification_ok) c.notes.push_back(row.functor + "(g) is not " + row.ident_text());
        }
        AlgebraInfo gi_info(g, cfg), hi_info(h, cfg);
        c.certificate = certify(gi_info, hi_info, 2, extra);
        if (!c.certificate) c.notes.push_back("no certificate");
        out.push_back(std::move(c));
    }
    return out;
}

const std::vector<std::string>& expected_components() {
    static const std::vector<std::string> v{"LS1", "LS5", "LS19", "LS14", "LS15", "LS18", "LS13"};
    return v;
}

const std::vector<std::string>& expected_ablation_components() {
    static const std::vector<std::string> v{"LS1",  "LS5", "LS19", "LS7",  "LS8", "LS14",
                                            "LS15", "LS17", "LS18", "LS16", "LS13"};
    return v;
}

const std::vector<std::string>& expected_rigid() {
    static const std::vector<std::string> v{"LS1", "LS5", "LS19"};
    return v;
}

const std::vector<std::tuple<std::string, std::string, std::string>>& expected_hasse() {
    static const std::vector<std::tuple<std::string, std::string, std::string>> v{
        {"LS1", "LS4", ""},
        {"LS10", "LS11", ""},
        {"LS10", "LS6[1]", ""},
        {"LS11", "LS0", ""},
        {"LS12", "LS11", ""},
        {"LS12", "LS3", ""},
        {"LS13", "LS11", ""},
        {"LS13[a,a]", "LS0", ""},
        {"LS14", "LS13", "beta = -alpha-1"},
        {"LS14", "LS15[-1/2]", "alpha = -1/2"},
        {"LS14", "LS2", ""},
        {"LS15", "LS12", ""},
        {"LS15", "LS13", "beta = -1/2"},
        {"LS15[-1/2]", "LS13[a,a]", "alpha = -1/2"},
        {"LS15[-1/2]", "LS3", ""},
        {"LS16", "LS11", ""},
        {"LS16", "LS13[a,a]", "alpha"},
        {"LS17", "LS12", ""},
        {"LS17", "LS15[-1/2]", ""},
        {"LS17", "LS16", "alpha = -1/2"},
        {"LS18", "LS13", "beta = alpha+1"},
        {"LS19", "LS12", ""},
        {"LS19", "LS14", "alpha = 0"},
        {"LS19", "LS18", "alpha = -1"},
        {"LS19", "LS4", ""},
        {"LS2", "LS3", ""},
        {"LS3", "LS0", ""},
        {"LS4", "LS2", ""},
        {"LS5", "LS6", "alpha"},
        {"LS5", "LS9", ""},
        {"LS6", "LS11", ""},
        {"LS6[1]", "LS0", ""},
        {"LS7", "LS12", ""},
        {"LS7", "LS2", ""},
        {"LS7", "LS6", "alpha = -1"},
        {"LS8", "LS12", ""},
        {"LS8", "LS6", "alpha = 0"},
        {"LS9", "LS10", ""},
    };
    return v;
}

}  // namespace lsdeg
