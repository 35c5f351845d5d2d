#include "lsdeg/report.hpp"

#include "lsdeg/catalog.hpp"
#include "lsdeg/cohomology.hpp"
#include "lsdeg/degeneration.hpp"
#include "lsdeg/golden.hpp"
#include "lsdeg/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace lsdeg {

using nlohmann::json;

const std::vector<ListedCocycle>& listed_cocycles() {
    static const std::vector<ListedCocycle> v{
        {"LS19", "e1^e2 (x) f1 - e1^f2 (x) e1 + e2^f1 (x) e1"},
        {"LS1", "2 e1^f2 (x) e1 + f1^f2 (x) f1"},
    };
    return v;
}

namespace {

json scalars(const std::vector<GaussianRational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json values_json(const std::map<std::string, GaussianRational>& v) {
    json o = json::object();
    for (const auto& [k, x] : v) o[k] = x.str();
    return o;
}

json certificate_json(const NondegenerationCertificate& c) {
    json o{{"rule", rule_name(c.rule)}, {"label", c.label()}, {"lhs", c.lhs_value}, {"rhs", c.rhs_value},
           {"reason", c.human_reason}};
    if (c.inner) o["inner"] = certificate_json(*c.inner);
    return o;
}

json edge_json(const DegenerationEdge& e) {
    return {{"from", e.from},
            {"to", e.to},
            {"kind", kind_name(e.kind)},
            {"constraint", e.constraint},
            {"scope", e.scope == EdgeScope::Orbit ? "orbit" : "family-closure"},
            {"provenance", provenance_name(e.provenance)},
            {"via", e.via}};
}

json witness_json(const VerifiedDegeneration& v) {
    json samples = json::array();
    for (const auto& s : v.samples)
        samples.push_back({{"ok", s.ok},
                           {"values", values_json(s.values)},
                           {"source", s.source_node},
                           {"target", s.target_node},
                           {"failure", s.failure},
                           {"detail", s.detail}});
    return {{"id", v.witness.id},
            {"source", v.witness.source.str()},
            {"target", v.witness.target.str()},
            {"uses_sqrt", v.witness.uses_sqrt},
            {"verified", v.verified()},
            {"failure", v.failure_summary()},
            {"samples", samples}};
}

std::pair<std::string, std::string> endpoint_nodes(const VerifiedDegeneration& v) {
    std::string s, t;
    if (!v.samples.empty()) {
        s = v.samples.front().source_node;
        t = v.samples.front().target_node;
    }
    if (s.empty()) s = generic_node(v.witness.source.entry);
    if (t.empty()) t = generic_node(v.witness.target.entry);
    return {s, t};
}

std::string sorted_join(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace

RunReport reproduce(const ReportOptions& opt) {
    RunReport rep;
    auto& fail = rep.failures;
    CertifierConfig cfg;
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;

    std::vector<std::string> nodes;
    if (opt.nodes) {
        for (const auto& n : catalog_nodes())
            if (std::find(opt.nodes->begin(), opt.nodes->end(), n.id) != opt.nodes->end()) nodes.push_back(n.id);
        for (const auto& n : *opt.nodes)
            if (!has_node(n)) throw Error("unknown node " + n);
    } else {
        for (const auto& n : catalog_nodes()) nodes.push_back(n.id);
    }
    const bool full = nodes.size() == catalog_nodes().size();
    std::set<std::string> in(nodes.begin(), nodes.end());
    auto selected = [&](const std::string& n) { return in.count(n) > 0; };
    auto entry_selected = [&](const std::string& e) {
        for (const auto& n : nodes)
            if (catalog_node(n).entry == e) return true;
        return false;
    };

    SpecializationPlan plan = make_plan(opt.seed, opt.samples);
    for (auto it = plan.node_samples.begin(); it != plan.node_samples.end();)
        it = selected(it->first) ? std::next(it) : plan.node_samples.erase(it);

    json out;
    out["schema"] = 1;
    out["tool"] = {{"name", "lsdeg"}, {"version", "1.0.0"}};
    out["seed"] = opt.seed;
    out["samples"] = opt.samples;
    out["skip_table4"] = opt.skip_table4;
    out["nodes"] = nodes;

    // catalog validity
    {
        json rows = json::array();
        int total = 0;
        for (const auto& e : catalog_entries()) {
            std::vector<std::vector<GaussianRational>> params;
            for (const auto& n : catalog_nodes())
                if (n.entry == e.name && selected(n.id))
                    for (const auto& s : plan.node_samples.at(n.id)) params.push_back(n.entry_params(s));
            if (params.empty()) continue;
            int bad = 0;
            json ps = json::array();
            for (const auto& p : params) {
                auto v = validate_structure(instantiate(e.name, p));
                bad += static_cast<int>(v.violations.size());
                ps.push_back(scalars(p));
            }
            total += bad;
            rows.push_back({{"entry", e.name}, {"params", ps}, {"violations", bad}});
            if (bad) fail.push_back("catalog: " + e.name + " has " + std::to_string(bad) + " violations");
        }
        out["catalog"] = {{"entries", rows}, {"violations", total}};
    }

    // invariants table
    {
        json rows = json::array();
        for (const auto& id : nodes) {
            auto samples = plan.node_samples.at(id);
            for (const auto& p : table1_probes(id)) samples.push_back(p);
            for (const auto& s : samples) {
                Algebra a = catalog_node(id).instantiate(s);
                auto prof = invariant_profile(a, cfg.grid, {}, cfg.samples, cfg.seed);
                json ij = json::object();
                for (const auto& [k, v] : prof.ij) ij[std::to_string(k.first) + "," + std::to_string(k.second)] = v.str();
                auto chk = check_table1(id, s, cfg);
                rows.push_back({{"node", id},
                                {"slots", scalars(s)},
                                {"orbit_dim", prof.orbit_dim},
                                {"gamma_rank", prof.gamma_rank},
                                {"derived", {prof.derived.first, prof.derived.second}},
                                {"traceless", prof.traceless},
                                {"ij", ij},
                                {"mismatches", chk.mismatches}});
                for (const auto& m : chk.mismatches) fail.push_back("table1: " + id + scalars(s).dump() + " " + m);
            }
        }
        json t1{{"rows", rows}};
        if (selected("LS14")) {
            auto d1 = derived_dims(catalog_node("LS14").instantiate({GaussianRational(1)}));
            auto dm1 = derived_dims(catalog_node("LS14").instantiate({GaussianRational(-1)}));
            t1["ls14_delta"] = {{"alpha=1", {d1.first, d1.second}},
                                {"alpha=-1", {dm1.first, dm1.second}},
                                {"reading", dm1.second == 1 && d1.second == 2 ? "delta(-1,alpha)" : "delta(1,alpha)"}};
        }
        out["table1"] = t1;
    }

    // witnesses
    std::vector<VerifiedDegeneration> for_graph;
    auto run_group = [&](const std::string& group) {
        std::vector<VerifiedDegeneration> res;
        for (const auto& w : builtin_witnesses(group)) {
            auto v = verify_witness(w, opt.seed, opt.samples);
            auto [s, t] = endpoint_nodes(v);
            if (selected(s) && selected(t)) res.push_back(std::move(v));
        }
        return res;
    };
    {
        auto orbit = run_group("orbit");
        json rows = json::array();
        int ok = 0;
        for (const auto& v : orbit) {
            rows.push_back(witness_json(v));
            if (v.verified()) {
                ++ok;
                for_graph.push_back(v);
            } else {
                fail.push_back("table3: " + v.witness.id + " " + v.failure_summary());
            }
        }
        if (full && orbit.size() != 34) fail.push_back("table3: expected 34 rows, have " + std::to_string(orbit.size()));
        json refuted = json::array();
        for (const auto& v : run_group("refuted")) {
            json r = witness_json(v);
            auto [s, t] = endpoint_nodes(v);
            auto cert = certify_nondegeneration(catalog_node(s).instantiate(plan.node_samples.at(s).front()),
                                                catalog_node(t).instantiate(plan.node_samples.at(t).front()), 2, cfg);
            if (cert) r["certificate"] = certificate_json(*cert);
            if (v.verified() || !cert) fail.push_back("table3: printed row " + v.witness.id + " was expected to be refuted");
            refuted.push_back(r);
        }
        out["table3"] = {{"rows", rows}, {"verified", ok}, {"total", orbit.size()}, {"refuted", refuted}};
    }
    if (opt.skip_table4) {
        out["table4"] = {{"skipped", true}};
    } else {
        auto fam = run_group("family");
        json rows = json::array();
        int ok = 0;
        for (const auto& v : fam) {
            rows.push_back(witness_json(v));
            if (v.verified()) {
                ++ok;
                for_graph.push_back(v);
            } else {
                fail.push_back("table4: " + v.witness.id + " " + v.failure_summary());
            }
        }
        if (full && fam.size() != 6) fail.push_back("table4: expected 6 rows, have " + std::to_string(fam.size()));
        out["table4"] = {{"rows", rows}, {"verified", ok}, {"total", fam.size()}};
    }
    {
        json rows = json::array();
        for (const auto& v : run_group("iso")) {
            rows.push_back(witness_json(v));
            if (!v.verified()) fail.push_back("isomorphism: " + v.witness.id + " " + v.failure_summary());
        }
        out["isomorphisms"] = rows;
    }

    // non-degenerations
    {
        json rows = json::array();
        for (const auto& c : check_table2(opt.seed, cfg)) {
            const Table2Row& r = *c.row;
            if (!entry_selected(r.g_entry) || !entry_selected(r.h_entry)) continue;
            json j{{"g", r.g_text()}, {"h", r.h_text()}, {"g_instance", c.g_label}, {"h_instance", c.h_label},
                   {"values", values_json(c.values)}, {"ok", c.ok()}, {"notes", c.notes}};
            if (!r.query.empty()) {
                j["query"] = r.query;
                j["cited"] = {r.g_dim ? json(*r.g_dim) : json(), r.h_dim ? json(*r.h_dim) : json()};
                j["computed"] = {*c.g_dim, *c.h_dim};
            } else {
                j["functor"] = r.functor;
                j["identified"] = r.ident_text();
                j["identification_ok"] = c.identification_ok;
            }
            if (c.certificate) j["certificate"] = certificate_json(*c.certificate);
            if (!c.ok()) {
                std::string why;
                for (const auto& n : c.notes) why += (why.empty() ? "" : "; ") + n;
                fail.push_back("table2: " + r.g_text() + " -/-> " + r.h_text() + ": " + why);
            }
            rows.push_back(j);
        }
        out["table2"] = {{"rows", rows}};
    }

    // graph
    GraphOptions gopt;
    gopt.cfg = cfg;
    gopt.strict = false;
    DegenerationGraph g = build_graph(nodes, for_graph, plan, gopt);
    auto hasse = hasse_reduction(g);
    {
        json edges = json::array(), closure = json::array(), hj = json::array(), undecided = json::array();
        for (const auto& e : g.edges) edges.push_back(edge_json(e));
        for (const auto& e : g.closure) closure.push_back(edge_json(e));
        for (const auto& e : hasse) hj.push_back(edge_json(e));
        json certs = json::array();
        for (const auto& [k, c] : g.certificates)
            certs.push_back({{"from", k.first}, {"to", k.second}, {"certificate", certificate_json(c)}});
        for (const auto& m : nodes)
            for (const auto& n : nodes)
                if (m != n && !g.best_edge(m, n) && !g.certificates.count({m, n})) undecided.push_back({m, n});
        for (const auto& c : g.collisions) fail.push_back("graph: " + c);
        out["graph"] = {{"edges", edges}, {"closure", closure}, {"hasse", hj}, {"certificates", certs},
                        {"collisions", g.collisions}, {"undecided", undecided}};
        if (full) {
            std::set<std::tuple<std::string, std::string, std::string>> got, want(expected_hasse().begin(),
                                                                                  expected_hasse().end());
            for (const auto& e : hasse) got.insert({e.from, e.to, e.constraint});
            for (const auto& e : want)
                if (!got.count(e)) fail.push_back("hasse: missing " + std::get<0>(e) + " -> " + std::get<1>(e));
            for (const auto& e : got)
                if (!want.count(e)) fail.push_back("hasse: unexpected " + std::get<0>(e) + " -> " + std::get<1>(e));
        }
    }

    // cohomology
    std::map<std::string, bool> rigid;
    {
        json rows = json::array();
        std::vector<std::string> rigid_list;
        for (const auto& id : nodes) {
            Algebra a = catalog_node(id).instantiate(plan.node_samples.at(id).front());
            auto h = h2_dims(a);
            rigid[id] = h.dim_even == 0;
            if (rigid[id]) rigid_list.push_back(id);
            rows.push_back({{"node", id}, {"h2", {h.dim_even, h.dim_odd}}, {"rigid", rigid[id]}});
        }
        json cocycles = json::array();
        for (const auto& c : listed_cocycles()) {
            if (!selected(c.node)) continue;
            Algebra a = catalog_node(c.node).instantiate();
            auto z = parse_wedge(c.text, a.dim);
            bool cyc = is_cocycle(a, z), cob = is_coboundary(a, z);
            cocycles.push_back({{"node", c.node}, {"cocycle", wedge_str(z)}, {"is_cocycle", cyc}, {"is_coboundary", cob}});
            if (!cyc || cob) fail.push_back("cohomology: listed cocycle of " + c.node + " is not a nontrivial class");
        }
        std::vector<std::string> want;
        for (const auto& r : expected_rigid())
            if (selected(r)) want.push_back(r);
        if (sorted_join(rigid_list) != sorted_join(want))
            fail.push_back("cohomology: rigid set {" + sorted_join(rigid_list) + "}, expected {" + sorted_join(want) + "}");
        out["cohomology"] = {{"nodes", rows}, {"rigid", rigid_list}, {"cocycles", cocycles}};
    }

    // components
    {
        auto comp = components(g, rigid);
        json list = json::array(), inc = json::array();
        std::vector<std::string> got;
        for (const auto& c : comp.components) {
            list.push_back({{"node", c.node}, {"justification", c.justification}, {"rigid", c.rigid}});
            got.push_back(c.node);
        }
        for (const auto& [a, b] : comp.inconclusive) inc.push_back({a, b});
        json dom = json::object();
        for (const auto& [n, e] : comp.domination) dom[n] = edge_json(e);
        out["components"] = {{"components", list}, {"inconclusive", inc}, {"dominated_by", dom}};
        if (full) {
            const auto& want = opt.skip_table4 ? expected_ablation_components() : expected_components();
            if (sorted_join(got) != sorted_join(want))
                fail.push_back("components: {" + sorted_join(got) + "}, expected {" + sorted_join(want) + "}");
        }
    }

    // distinctness
    {
        json rows = json::array();
        std::map<std::string, int> counts;
        for (const auto& r : distinctness_report(plan, cfg)) {
            ++counts[r.verdict];
            if (r.verdict == "separated") continue;
            rows.push_back({{"a", r.a.label()}, {"b", r.b.label()}, {"verdict", r.verdict}, {"detail", r.detail}});
        }
        out["distinctness"] = {{"counts", counts}, {"unseparated", rows}};
    }

    out["failures"] = fail;
    out["ok"] = fail.empty();
    rep.json = out.dump(2) + "\n";
    std::map<std::string, bool> rigid_nodes;
    for (const auto& [k, v] : rigid)
        if (v) rigid_nodes[k] = true;
    rep.dot = to_dot(nodes, hasse, rigid_nodes);
    return rep;
}

StandardGraph standard_graph(const ReportOptions& opt) {
    StandardGraph out;
    CertifierConfig cfg;
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    std::vector<std::string> nodes;
    for (const auto& n : catalog_nodes())
        if (!opt.nodes || std::find(opt.nodes->begin(), opt.nodes->end(), n.id) != opt.nodes->end())
            nodes.push_back(n.id);
    out.plan = make_plan(opt.seed, opt.samples);
    std::vector<std::string> groups{"orbit"};
    if (!opt.skip_table4) groups.push_back("family");
    for (const auto& grp : groups)
        for (const auto& w : builtin_witnesses(grp)) {
            auto v = verify_witness(w, opt.seed, opt.samples);
            auto [s, t] = endpoint_nodes(v);
            if (v.verified() && std::count(nodes.begin(), nodes.end(), s) && std::count(nodes.begin(), nodes.end(), t))
                out.verified.push_back(std::move(v));
        }
    GraphOptions gopt;
    gopt.cfg = cfg;
    gopt.strict = false;
    out.graph = build_graph(nodes, out.verified, out.plan, gopt);
    for (const auto& id : nodes)
        out.rigid[id] = rigid_sufficient(catalog_node(id).instantiate(out.plan.node_samples.at(id).front()));
    return out;
}

}  // namespace lsdeg
