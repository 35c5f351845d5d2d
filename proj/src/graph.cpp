#include "lsdeg/graph.hpp"

#include "lsdeg/expr.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace lsdeg {

std::string kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::AllMembers: return "AllMembers";
        case EdgeKind::SpecialMember: return "SpecialMember";
        case EdgeKind::FamilySweep: return "FamilySweep";
    }
    return "";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::WitnessVerified: return "WitnessVerified";
        case Provenance::TrivialScaling: return "TrivialScaling";
        case Provenance::TransitiveVia: return "TransitiveVia";
    }
    return "";
}

std::string DegenerationEdge::label() const {
    std::string s = from + " -> " + to + " " + kind_name(kind);
    if (!constraint.empty()) s += "(" + constraint + ")";
    return s + " [" + provenance_name(provenance) + " " + via + "]";
}

namespace {

int kind_rank(EdgeKind k) { return k == EdgeKind::AllMembers ? 0 : k == EdgeKind::FamilySweep ? 1 : 2; }

EdgeKind kind_for(const DegenerationEdge& e) {
    if (e.scope == EdgeScope::FamilyClosure || e.source_cov == Coverage::All) {
        if (e.scope == EdgeScope::Orbit && e.source_cov == Coverage::Special) return EdgeKind::SpecialMember;
        switch (e.target_cov) {
            case Coverage::All: return EdgeKind::AllMembers;
            case Coverage::Sweep: return EdgeKind::FamilySweep;
            case Coverage::Special: return EdgeKind::SpecialMember;
        }
    }
    return EdgeKind::SpecialMember;
}

void finish_edge(DegenerationEdge& e) {
    e.kind = kind_for(e);
    std::vector<std::string> parts;
    if (e.kind == EdgeKind::SpecialMember) {
        if (!e.source_constraint.empty()) parts.push_back(e.source_constraint);
        if (!e.target_constraint.empty()) parts.push_back(e.target_constraint);
    } else if (e.kind == EdgeKind::FamilySweep) {
        parts.push_back(e.target_constraint);
    }
    e.constraint.clear();
    for (auto& p : parts) e.constraint += (e.constraint.empty() ? "" : ", ") + p;
}

std::string rename(const std::string& expr, const std::map<std::string, std::string>& names) {
    std::string out, id;
    auto flush = [&] {
        if (id.empty()) return;
        auto it = names.find(id);
        out += it == names.end() ? id : it->second;
        id.clear();
    };
    for (char c : expr) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            if (id.empty() && std::isdigit(static_cast<unsigned char>(c))) out += c;
            else id += c;
        } else {
            flush();
            if (c != ' ') out += c;
        }
    }
    flush();
    return out;
}

int entry_index_of_slot(const CatalogNode& n, int slot) {
    for (size_t i = 0; i < n.slot_of.size(); ++i)
        if (n.slot_of[i] == slot) return static_cast<int>(i);
    return -1;
}

}  // namespace

DegenerationEdge edge_from_witness(const VerifiedDegeneration& v) {
    const Witness& w = v.witness;
    if (v.samples.empty()) throw Error("witness " + w.id + " has no samples");
    const WitnessVerdict& s0 = v.samples.front();
    DegenerationEdge e;
    e.from = s0.source_node;
    e.to = s0.target_node;
    e.scope = w.binds_family() ? EdgeScope::FamilyClosure : EdgeScope::Orbit;
    e.provenance = w.id.rfind("scale:", 0) == 0 ? Provenance::TrivialScaling : Provenance::WitnessVerified;
    e.via = w.id;

    auto free = w.free_symbols();
    auto is_free = [&](const std::string& x) { return std::find(free.begin(), free.end(), x) != free.end(); };
    std::map<std::string, std::string> src_names, tgt_names;
    std::vector<std::string> src_special;
    if (e.scope == EdgeScope::Orbit && !w.explicit_source) {
        const CatalogNode& n = catalog_node(e.from);
        for (int k = 0; k < static_cast<int>(n.slots.size()); ++k) {
            std::string x = trim(w.source.params.at(entry_index_of_slot(n, k)));
            if (is_free(x) && !src_names.count(x)) src_names[x] = n.slots[k];
            else src_special.push_back(n.slots[k] + " = " + x);
        }
    }
    const CatalogNode& tn = catalog_node(e.to);
    std::vector<std::string> tgt_special, swept;
    std::vector<std::pair<int, std::string>> pending;
    for (int k = 0; k < static_cast<int>(tn.slots.size()); ++k) {
        std::string x = trim(w.target.params.at(entry_index_of_slot(tn, k)));
        if (is_free(x) && !tgt_names.count(x)) {
            tgt_names[x] = tn.slots[k];
            swept.push_back(tn.slots[k]);
        } else {
            pending.emplace_back(k, x);
        }
    }
    std::map<std::string, std::string> names = src_names;
    for (auto& [k, v2] : tgt_names) names[k] = v2;
    for (auto& [k, x] : pending) tgt_special.push_back(tn.slots[k] + " = " + rename(x, names));
    for (auto& c : src_special) {
        auto eq = c.find(" = ");
        e.source_constraint += (e.source_constraint.empty() ? "" : ", ") + c.substr(0, eq + 3) + rename(c.substr(eq + 3), names);
    }
    e.source_cov = src_special.empty() ? Coverage::All : Coverage::Special;
    if (tn.slots.empty()) {
        e.target_cov = Coverage::All;
    } else if (tgt_special.empty()) {
        e.target_cov = Coverage::Sweep;
        for (auto& x : swept) e.target_constraint += (e.target_constraint.empty() ? "" : ", ") + x;
    } else {
        e.target_cov = Coverage::Special;
        for (auto& c : tgt_special) e.target_constraint += (e.target_constraint.empty() ? "" : ", ") + c;
    }
    finish_edge(e);
    return e;
}

bool composable(const DegenerationEdge& e1, const DegenerationEdge& e2) {
    if (e1.to != e2.from || e1.from == e2.to) return false;
    if (e1.scope != EdgeScope::Orbit || e2.scope != EdgeScope::Orbit) return false;
    if (catalog_node(e1.to).slots.empty()) return true;
    return e1.target_cov != Coverage::Special || e2.source_cov == Coverage::All;
}

std::optional<DegenerationEdge> compose(const DegenerationEdge& e1, const DegenerationEdge& e2) {
    if (!composable(e1, e2)) return std::nullopt;
    DegenerationEdge e;
    e.from = e1.from;
    e.to = e2.to;
    e.scope = EdgeScope::Orbit;
    e.source_cov = e1.source_cov;
    e.source_constraint = e1.source_constraint;
    const bool k_plain = catalog_node(e1.to).slots.empty();
    if (catalog_node(e2.to).slots.empty()) {
        e.target_cov = Coverage::All;
    } else if (e2.target_cov == Coverage::Sweep && (k_plain || e1.target_cov != Coverage::Special)) {
        e.target_cov = Coverage::Sweep;
        e.target_constraint = e2.target_constraint;
    } else {
        e.target_cov = Coverage::Special;
        e.target_constraint = e2.target_cov == Coverage::Special ? e2.target_constraint
                                                                  : e1.to + " with " + e1.target_constraint;
    }
    e.provenance = Provenance::TransitiveVia;
    e.via = e1.to;
    finish_edge(e);
    return e;
}

bool better_edge(const DegenerationEdge& a, const DegenerationEdge& b) {
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.direct() != b.direct()) return a.direct();
    return false;
}

namespace {

using EdgeKey = std::tuple<std::string, std::string, EdgeScope>;

void offer(std::map<EdgeKey, DegenerationEdge>& m, const DegenerationEdge& e, bool& changed) {
    if (e.from == e.to) return;
    EdgeKey k{e.from, e.to, e.scope};
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, e);
        changed = true;
    } else if (better_edge(e, it->second)) {
        it->second = e;
        changed = true;
    }
}

}  // namespace

std::vector<DegenerationEdge> transitive_closure(const std::vector<DegenerationEdge>& edges) {
    std::map<EdgeKey, DegenerationEdge> m;
    bool changed = false;
    for (auto& e : edges) offer(m, e, changed);
    changed = true;
    while (changed) {
        changed = false;
        std::vector<DegenerationEdge> cur;
        for (auto& [_, e] : m)
            if (e.scope == EdgeScope::Orbit) cur.push_back(e);
        for (auto& e1 : cur)
            for (auto& e2 : cur)
                if (auto c = compose(e1, e2)) offer(m, *c, changed);
    }
    std::vector<DegenerationEdge> out;
    for (auto& [_, e] : m) out.push_back(e);
    return out;
}

const DegenerationEdge* DegenerationGraph::best_edge(const std::string& from, const std::string& to) const {
    const DegenerationEdge* best = nullptr;
    for (auto& e : closure)
        if (e.from == from && e.to == to && (!best || better_edge(e, *best))) best = &e;
    return best;
}

DegenerationGraph build_graph(const std::vector<std::string>& nodes, const std::vector<VerifiedDegeneration>& verified,
                              const SpecializationPlan& plan, const GraphOptions& opt) {
    DegenerationGraph g;
    for (auto& n : catalog_nodes())
        if (std::find(nodes.begin(), nodes.end(), n.id) != nodes.end()) g.nodes.push_back(n.id);
    auto in_graph = [&](const std::string& id) { return std::find(g.nodes.begin(), g.nodes.end(), id) != g.nodes.end(); };

    std::vector<const VerifiedDegeneration*> used;
    for (auto& v : verified) {
        if (!v.verified()) continue;
        DegenerationEdge e = edge_from_witness(v);
        if (!in_graph(e.from) || !in_graph(e.to)) continue;
        g.edges.push_back(e);
        used.push_back(&v);
    }
    std::vector<VerifiedDegeneration> scaling;
    if (in_graph("LS0"))
        for (auto& id : g.nodes)
            if (id != "LS0") {
                auto v = verify_witness(trivial_scaling_witness(catalog_node(id)), plan.seed, plan.samples);
                if (v.verified()) g.edges.push_back(edge_from_witness(v));
            }
    g.closure = transitive_closure(g.edges);

    std::map<std::string, std::vector<std::unique_ptr<AlgebraInfo>>> infos;
    auto node_infos = [&](const std::string& id) -> std::vector<std::unique_ptr<AlgebraInfo>>& {
        auto& list = infos[id];
        if (list.empty()) {
            const CatalogNode& n = catalog_node(id);
            auto it = plan.node_samples.find(id);
            std::vector<std::vector<GaussianRational>> samples =
                it != plan.node_samples.end() ? it->second : std::vector<std::vector<GaussianRational>>{{}};
            for (auto& s : samples) list.push_back(std::make_unique<AlgebraInfo>(n.instantiate(s), opt.cfg));
        }
        return list;
    };

    if (opt.certificates) {
        for (auto& m : g.nodes)
            for (auto& n : g.nodes) {
                if (m == n) continue;
                auto* e = g.best_edge(m, n);
                if (e && e->kind != EdgeKind::SpecialMember) continue;
                std::optional<NondegenerationCertificate> first;
                bool all = true;
                for (auto& a : node_infos(m)) {
                    for (auto& b : node_infos(n)) {
                        auto c = certify(*a, *b, 2);
                        if (!c) {
                            all = false;
                            break;
                        }
                        if (!first) first = c;
                    }
                    if (!all) break;
                }
                if (all && first) g.certificates.emplace(std::make_pair(m, n), *first);
            }
    }

    for (auto* v : used) {
        if (v->witness.binds_family()) continue;
        for (auto& s : v->samples) {
            AlgebraInfo a(instantiate(v->witness.source.entry, s.source_params), opt.cfg);
            AlgebraInfo b(instantiate(v->witness.target.entry, s.target_params), opt.cfg);
            if (auto c = certify(a, b, 2))
                g.collisions.push_back("verified witness " + v->witness.id + " contradicts " + c->label());
        }
    }
    for (auto& e : g.closure) {
        if (e.scope != EdgeScope::Orbit || e.kind != EdgeKind::AllMembers || e.direct()) continue;
        for (auto& a : node_infos(e.from))
            if (auto c = certify(*a, *node_infos(e.to).front(), 2)) {
                g.collisions.push_back("edge " + e.label() + " contradicts " + c->label());
                break;
            }
    }
    if (opt.strict && !g.collisions.empty()) throw InconsistentGraph(g.collisions.front());
    return g;
}

std::vector<DegenerationEdge> hasse_reduction(const DegenerationGraph& g) {
    std::vector<DegenerationEdge> orbit;
    for (auto& e : g.closure)
        if (e.scope == EdgeScope::Orbit) orbit.push_back(e);
    std::vector<DegenerationEdge> out;
    for (auto& e : orbit) {
        bool implied = false;
        for (auto& e1 : orbit) {
            if (e1.from != e.from || e1.to == e.to) continue;
            for (auto& e2 : orbit)
                if (e2.from == e1.to && e2.to == e.to && composable(e1, e2)) {
                    implied = true;
                    break;
                }
            if (implied) break;
        }
        if (!implied) out.push_back(e);
    }
    return out;
}

ComponentReport components(const DegenerationGraph& g, const std::map<std::string, bool>& rigid) {
    ComponentReport rep;
    for (auto& n : g.nodes) {
        const DegenerationEdge* dom = nullptr;
        for (auto& e : g.closure)
            if (e.to == n && e.from != n && e.kind != EdgeKind::SpecialMember && (!dom || better_edge(e, *dom)))
                dom = &e;
        if (dom) {
            rep.domination.emplace(n, *dom);
            continue;
        }
        ComponentEntry c{n, "", false};
        auto r = rigid.find(n);
        c.rigid = r != rigid.end() && r->second;
        if (c.rigid) c.justification = "rigid orbit: (H^2)_0 = 0";
        else if (!catalog_node(n).slots.empty()) c.justification = "non-dominated family";
        else c.justification = "non-dominated orbit";
        for (auto& m : g.nodes) {
            if (m == n) continue;
            if (g.certificates.count({m, n}) || g.best_edge(n, m)) continue;
            rep.inconclusive.emplace_back(n, m);
        }
        rep.components.push_back(std::move(c));
    }
    return rep;
}

std::string to_dot(const std::vector<std::string>& nodes, const std::vector<DegenerationEdge>& hasse,
                   const std::map<std::string, bool>& rigid) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n";
    for (auto& n : nodes) {
        auto r = rigid.find(n);
        os << "  \"" << n << "\"";
        if (r != rigid.end() && r->second) os << " [shape=doubleoctagon, style=bold]";
        os << ";\n";
    }
    for (auto& e : hasse) {
        os << "  \"" << e.from << "\" -> \"" << e.to << "\"";
        std::vector<std::string> attrs;
        if (e.kind == EdgeKind::SpecialMember) attrs.push_back("label=\"" + e.constraint + "\"");
        if (e.scope == EdgeScope::FamilyClosure) attrs.push_back("style=dashed");
        if (!attrs.empty()) {
            os << " [";
            for (size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace lsdeg
