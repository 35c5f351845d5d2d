#include "lsdeg/catalog.hpp"

#include <algorithm>
#include <memory>

namespace lsdeg {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"LS0", {}, ""},
        {"LS1", {}, ""},
        {"LS2", {}, ""},
        {"LS3", {}, ""},
        {"LS4", {}, ""},
        {"LS5", {}, ""},
        {"LS6", {"alpha"}, "alpha = alpha'"},
        {"LS7", {}, ""},
        {"LS8", {}, ""},
        {"LS9", {}, ""},
        {"LS10", {}, ""},
        {"LS11", {}, ""},
        {"LS12", {}, ""},
        {"LS13", {"alpha", "beta"}, "{alpha, beta} = {alpha', beta'}"},
        {"LS14", {"alpha"}, "alpha = alpha' or alpha + alpha' = -1"},
        {"LS15", {"alpha"}, "alpha = alpha'"},
        {"LS16", {"alpha"}, "alpha = alpha'"},
        {"LS17", {}, ""},
        {"LS18", {"alpha"}, "alpha = alpha'"},
        {"LS19", {}, ""},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    throw Error("unknown catalog entry '" + name + "'");
}

namespace {

enum B { E1 = 0, E2 = 1, F1 = 2, F2 = 3 };

template <class S>
struct Builder {
    SuperAlgebra<S> a;
    explicit Builder(const std::string& name) : a(SuperDim{2, 2}, name) {}
    Builder& set(int x, int y, std::initializer_list<std::pair<int, S>> terms) {
        std::vector<S> v(4, S(0));
        for (const auto& [k, c] : terms) v[k] = c;
        a.set_product(x, y, v);
        return *this;
    }
};

}  // namespace

template <class S>
SuperAlgebra<S> instantiate_as(const std::string& name, const std::vector<S>& p) {
    const CatalogEntry& e = catalog_entry(name);
    if (p.size() != e.params.size())
        throw ArityMismatch(name + " expects " + std::to_string(e.params.size()) + " parameter(s), got " +
                            std::to_string(p.size()));
    const S one(1), half = S(GaussianRational(1, 2));
    Builder<S> b(name);
    if (name == "LS0") {
    } else if (name == "LS1") {
        b.set(F1, F1, {{E1, one}}).set(F2, F2, {{E2, one}});
    } else if (name == "LS2") {
        b.set(F1, F1, {{E1, one}}).set(F2, F2, {{E1, one}});
    } else if (name == "LS3") {
        b.set(F1, F1, {{E1, one}});
    } else if (name == "LS4") {
        b.set(F1, F2, {{E1, one}}).set(F2, F2, {{E2, one}});
    } else if (name == "LS5") {
        b.set(E1, F1, {{F1, one}}).set(E2, F2, {{F2, one}});
    } else if (name == "LS6") {
        b.set(E2, F1, {{F1, one}}).set(E2, F2, {{F2, p[0]}});
    } else if (name == "LS7") {
        b.set(E2, F1, {{F1, one}}).set(E2, F2, {{F2, -one}}).set(F1, F2, {{E1, one}});
    } else if (name == "LS8") {
        b.set(E2, F1, {{F1, one}}).set(F2, F2, {{E1, one}});
    } else if (name == "LS9") {
        b.set(E1, F1, {{F1, one}}).set(E1, F2, {{F2, one}}).set(E2, F2, {{F1, one}});
    } else if (name == "LS10") {
        b.set(E2, F1, {{F1, one}}).set(E2, F2, {{F1, one}, {F2, one}});
    } else if (name == "LS11") {
        b.set(E2, F2, {{F1, one}});
    } else if (name == "LS12") {
        b.set(E2, F2, {{F1, one}}).set(F2, F2, {{E1, one}});
    } else if (name == "LS13") {
        b.set(E1, E2, {{E1, one}}).set(E2, F1, {{F1, p[0]}}).set(E2, F2, {{F2, p[1]}});
    } else if (name == "LS14") {
        b.set(E1, E2, {{E1, one}}).set(E2, F1, {{F1, p[0]}}).set(E2, F2, {{F2, -(p[0] + one)}}).set(F1, F2, {{E1, one}});
    } else if (name == "LS15") {
        b.set(E1, E2, {{E1, one}}).set(E2, F1, {{F1, p[0]}}).set(E2, F2, {{F2, -half}}).set(F2, F2, {{E1, one}});
    } else if (name == "LS16") {
        b.set(E1, E2, {{E1, one}}).set(E2, F1, {{F1, p[0]}}).set(E2, F2, {{F1, one}, {F2, p[0]}});
    } else if (name == "LS17") {
        b.set(E1, E2, {{E1, one}})
            .set(E2, F1, {{F1, -half}})
            .set(E2, F2, {{F1, one}, {F2, -half}})
            .set(F2, F2, {{E1, one}});
    } else if (name == "LS18") {
        b.set(E1, E2, {{E1, one}}).set(E1, F2, {{F1, one}}).set(E2, F1, {{F1, p[0]}}).set(E2, F2, {{F2, p[0] + one}});
    } else if (name == "LS19") {
        b.set(E1, E2, {{E1, one}})
            .set(E1, F2, {{F1, one}})
            .set(E2, F1, {{F1, -one}})
            .set(F1, F2, {{E1, one}})
            .set(F2, F2, {{E2, S(2)}});
    }
    return b.a;
}

template SuperAlgebra<GaussianRational> instantiate_as(const std::string&, const std::vector<GaussianRational>&);
template SuperAlgebra<RatFun> instantiate_as(const std::string&, const std::vector<RatFun>&);

Algebra instantiate(const std::string& name, const std::vector<GaussianRational>& params) {
    return instantiate_as<GaussianRational>(name, params);
}

std::vector<GaussianRational> CatalogNode::entry_params(const std::vector<GaussianRational>& free) const {
    if (free.size() != slots.size())
        throw ArityMismatch(id + " expects " + std::to_string(slots.size()) + " parameter(s)");
    std::vector<GaussianRational> out;
    for (size_t i = 0; i < slot_of.size(); ++i) out.push_back(slot_of[i] >= 0 ? free[slot_of[i]] : fixed[i]);
    return out;
}

Algebra CatalogNode::instantiate(const std::vector<GaussianRational>& free) const {
    auto params = entry_params(free);
    if (classify(entry, params) != id) {
        std::string text;
        for (const auto& p : params) text += (text.empty() ? "" : ",") + p.str();
        throw ExcludedParameter("parameters (" + text + ") do not belong to node " + id);
    }
    Algebra a = lsdeg::instantiate(entry, params);
    a.label = id;
    return a;
}

const std::vector<CatalogNode>& catalog_nodes() {
    static const std::vector<CatalogNode> nodes = [] {
        const GaussianRational h(-1, 2);
        std::vector<CatalogNode> v = {
            {"LS1", "LS1", {}, {}, {}, 1},
            {"LS5", "LS5", {}, {}, {}, 2},
            {"LS19", "LS19", {}, {}, {}, 3},
            {"LS4", "LS4", {}, {}, {}, 4},
            {"LS7", "LS7", {}, {}, {}, 5},
            {"LS8", "LS8", {}, {}, {}, 6},
            {"LS9", "LS9", {}, {}, {}, 7},
            {"LS14", "LS14", {"alpha"}, {0}, {GaussianRational(0)}, 8},
            {"LS15", "LS15", {"alpha"}, {0}, {GaussianRational(0)}, 9},
            {"LS17", "LS17", {}, {}, {}, 10},
            {"LS18", "LS18", {"alpha"}, {0}, {GaussianRational(0)}, 11},
            {"LS2", "LS2", {}, {}, {}, 12},
            {"LS6", "LS6", {"alpha"}, {0}, {GaussianRational(0)}, 13},
            {"LS10", "LS10", {}, {}, {}, 14},
            {"LS12", "LS12", {}, {}, {}, 15},
            {"LS13", "LS13", {"alpha", "beta"}, {0, 1}, {GaussianRational(0), GaussianRational(0)}, 16},
            {"LS15[-1/2]", "LS15", {}, {-1}, {h}, 17},
            {"LS16", "LS16", {"alpha"}, {0}, {GaussianRational(0)}, 18},
            {"LS3", "LS3", {}, {}, {}, 19},
            {"LS11", "LS11", {}, {}, {}, 20},
            {"LS6[1]", "LS6", {}, {-1}, {GaussianRational(1)}, 21},
            {"LS13[a,a]", "LS13", {"alpha"}, {0, 0}, {GaussianRational(0), GaussianRational(0)}, 22},
            {"LS0", "LS0", {}, {}, {}, 23},
        };
        return v;
    }();
    return nodes;
}

const CatalogNode& catalog_node(const std::string& id) {
    for (const auto& n : catalog_nodes())
        if (n.id == id) return n;
    throw Error("unknown catalog node '" + id + "'");
}

bool has_node(const std::string& id) {
    for (const auto& n : catalog_nodes())
        if (n.id == id) return true;
    return false;
}

std::string classify(const std::string& entry, const std::vector<GaussianRational>& p) {
    const CatalogEntry& e = catalog_entry(entry);
    if (p.size() != e.params.size()) throw ArityMismatch(entry + " parameter count");
    if (entry == "LS6" && p[0] == GaussianRational(1)) return "LS6[1]";
    if (entry == "LS13" && p[0] == p[1]) return "LS13[a,a]";
    if (entry == "LS15" && p[0] == GaussianRational(-1, 2)) return "LS15[-1/2]";
    return entry;
}

std::string generic_node(const std::string& entry) {
    catalog_entry(entry);
    return entry;
}

bool recorded_isomorphic(const std::string& entry, const std::vector<GaussianRational>& p,
                         const std::vector<GaussianRational>& q) {
    if (p == q) return true;
    if (entry == "LS13") return p.size() == 2 && q.size() == 2 && p[0] == q[1] && p[1] == q[0];
    if (entry == "LS14") return p[0] + q[0] == GaussianRational(-1);
    return false;
}

std::vector<GaussianRational> special_values() {
    std::vector<GaussianRational> v;
    for (long x : {0L, 1L, -1L, -2L, 2L, 3L, -3L}) v.emplace_back(x);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, 2}, {1, 2}, {1, 3}, {-1, 3}, {2, 3}, {-2, 3}, {3, 2}, {-3, 2}})
        v.emplace_back(a, b);
    return v;
}

GaussianRational draw_parameter(std::mt19937_64& gen) {
    const auto special = special_values();
    while (true) {
        long rn = static_cast<long>(gen() % 19) - 9;
        long rd = static_cast<long>(gen() % 5) + 1;
        long in = static_cast<long>(gen() % 19) - 9;
        long id = static_cast<long>(gen() % 5) + 1;
        if (in == 0) continue;
        GaussianRational z(Rational(rn) / Rational(rd), Rational(in) / Rational(id));
        if (std::find(special.begin(), special.end(), z) == special.end()) return z;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

bool generic_pair(const GaussianRational& a, const GaussianRational& b) {
    const GaussianRational one(1);
    for (const auto& z : {a - b, a - b - one, b - a - one, a + b, a + b + one, a * b - one})
        if (z.is_zero()) return false;
    return true;
}

}  // namespace

SpecializationPlan make_plan(std::uint64_t seed, int samples) {
    SpecializationPlan plan;
    plan.seed = seed;
    plan.samples = samples;
    for (const auto& n : catalog_nodes()) {
        auto& list = plan.node_samples[n.id];
        if (n.slots.empty()) {
            list.push_back({});
            continue;
        }
        std::mt19937_64 gen(derive_seed(seed, n.id));
        while (static_cast<int>(list.size()) < samples) {
            std::vector<GaussianRational> s;
            for (size_t k = 0; k < n.slots.size(); ++k) s.push_back(draw_parameter(gen));
            if (s.size() == 2 && !generic_pair(s[0], s[1])) continue;
            if (classify(n.entry, n.entry_params(s)) != n.id) continue;
            if (std::find(list.begin(), list.end(), s) != list.end()) continue;
            list.push_back(s);
        }
    }
    return plan;
}

Fingerprint fingerprint(const Algebra& a, const CertifierConfig& cfg) {
    Fingerprint f;
    f.self = invariant_profile(a, cfg.grid, cfg.queries, cfg.samples, cfg.seed);
    for (Functor w : {Functor::A, Functor::Ab, Functor::F})
        f.functors[w] = invariant_profile(functor_apply(a, w), cfg.grid, cfg.queries, cfg.samples, cfg.seed);
    return f;
}

std::string Instantiation::label() const {
    if (params.empty()) return entry;
    std::string s = entry + "[";
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + params[i].str();
    return s + "]";
}

std::vector<DistinctnessRow> distinctness_report(const SpecializationPlan& plan, const CertifierConfig& cfg) {
    std::vector<Instantiation> inst;
    auto add = [&](Instantiation x) {
        for (const auto& y : inst)
            if (y.entry == x.entry && y.params == x.params) return;
        inst.push_back(std::move(x));
    };
    for (const auto& n : catalog_nodes()) {
        auto it = plan.node_samples.find(n.id);
        if (it == plan.node_samples.end()) continue;
        for (const auto& s : it->second) {
            auto p = n.entry_params(s);
            add({n.entry, p});
            if (n.entry == "LS13" && p[0] != p[1]) add({n.entry, {p[1], p[0]}});
            if (n.entry == "LS14") add({n.entry, {GaussianRational(-1) - p[0]}});
            if (n.entry == "LS6" && !p[0].is_zero()) add({n.entry, {p[0].inverse()}});
        }
    }
    std::vector<std::unique_ptr<AlgebraInfo>> infos;
    for (const auto& x : inst) infos.push_back(std::make_unique<AlgebraInfo>(instantiate(x.entry, x.params), cfg));
    std::vector<DistinctnessRow> rows;
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = i + 1; j < inst.size(); ++j) {
            DistinctnessRow r{inst[i], inst[j], "", ""};
            if (inst[i].entry == inst[j].entry && recorded_isomorphic(inst[i].entry, inst[i].params, inst[j].params)) {
                r.verdict = "recorded-isomorphic";
                r.detail = catalog_entry(inst[i].entry).iso_condition;
            } else if (auto sep = infos[i]->separating_invariant(*infos[j], 1)) {
                r.verdict = "separated";
                r.detail = *sep;
            } else {
                r.verdict = "needs manual isomorphism analysis";
            }
            rows.push_back(std::move(r));
        }
    return rows;
}

}  // namespace lsdeg
