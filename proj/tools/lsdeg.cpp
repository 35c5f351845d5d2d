#include "lsdeg/algebra_io.hpp"
#include "lsdeg/catalog.hpp"
#include "lsdeg/cohomology.hpp"
#include "lsdeg/degeneration.hpp"
#include "lsdeg/expr.hpp"
#include "lsdeg/graph.hpp"
#include "lsdeg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace lsdeg;

namespace {

struct MismatchExit {
    int code;
};

// "LS14[2/7]", "LS13[1,-1/2]", "LS19" or a path to an algebra file.
Algebra load_algebra(const std::string& arg) {
    static const std::regex ref(R"(^(LS\d+)(?:\[(.*)\])?$)");
    std::smatch m;
    if (std::regex_match(arg, m, ref)) {
        std::vector<GaussianRational> params;
        if (m[2].matched)
            for (const auto& p : split_top_level(m[2].str())) {
                RatFun r = parse_scalar(p, ExprEnv{});
                if (!r.is_constant()) throw ParseError("parameter must be a constant: " + p, 1, 1);
                params.push_back(r.constant_value());
            }
        Algebra a = instantiate(m[1].str(), params);
        a.label = arg;
        return a;
    }
    auto parsed = read_algebra_file(arg);
    Algebra a = parsed.constant_algebra();
    a.label = parsed.name;
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path, 0, 0);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path, 0, 0);
    f << text;
}

void print_certificate(const NondegenerationCertificate& c) {
    std::cout << c.label() << ": " << c.lhs_value << " vs " << c.rhs_value << "\n  " << c.human_reason << "\n";
}

std::string ij_key(std::pair<int, int> k) { return std::to_string(k.first) + "," + std::to_string(k.second); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degenerations of (2|2)-dimensional complex Lie superalgebras"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    int samples = 5;
    bool skip_table4 = false;

    auto* check = app.add_subcommand("check", "validate an algebra");
    std::string check_arg;
    check->add_option("algebra", check_arg, "file or catalog reference")->required();

    auto* profile = app.add_subcommand("profile", "invariant profile of an algebra");
    std::string profile_arg;
    profile->add_option("algebra", profile_arg)->required();
    profile->add_option("--seed", seed);
    profile->add_option("--samples", samples);

    auto* witness = app.add_subcommand("witness", "degeneration witnesses");
    witness->require_subcommand(1);
    auto* wverify = witness->add_subcommand("verify", "verify witnesses from a file or the built-in database");
    std::string witness_file, builtin_group;
    wverify->add_option("file", witness_file);
    wverify->add_option("--builtin", builtin_group, "orbit, family, refuted, iso or all");
    wverify->add_option("--seed", seed);
    wverify->add_option("--samples", samples);
    auto* wshow = witness->add_subcommand("show", "print built-in witnesses");
    std::string show_group;
    wshow->add_option("group", show_group);

    auto* certify_cmd = app.add_subcommand("certify", "search a non-degeneration certificate g -/-> h");
    std::string cert_g, cert_h;
    int depth = 2;
    certify_cmd->add_option("source", cert_g)->required();
    certify_cmd->add_option("target", cert_h)->required();
    certify_cmd->add_option("--depth", depth);
    certify_cmd->add_option("--seed", seed);

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the verified degenerations");
    std::string hasse_dot;
    hasse->add_option("--dot", hasse_dot);
    hasse->add_option("--seed", seed);
    hasse->add_option("--samples", samples);

    auto* comps = app.add_subcommand("components", "irreducible components");
    comps->add_option("--seed", seed);
    comps->add_option("--samples", samples);
    comps->add_flag("--skip-table4", skip_table4, "withhold the family-parameter witnesses");

    auto* coh = app.add_subcommand("cohomology", "H^2(g,g)");
    std::string coh_arg, cocycle;
    bool show_basis = false;
    coh->add_option("algebra", coh_arg)->required();
    coh->add_option("--cocycle", cocycle, "test a 2-cochain in wedge notation");
    coh->add_flag("--basis", show_basis);

    auto* cat = app.add_subcommand("catalog", "catalog of algebras");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list");
    auto* cat_show = cat->add_subcommand("show");
    std::string show_arg;
    cat_show->add_option("algebra", show_arg)->required();
    auto* cat_iso = cat->add_subcommand("iso-search", "monomial isomorphism a -> b");
    std::string iso_a, iso_b;
    cat_iso->add_option("from", iso_a)->required();
    cat_iso->add_option("to", iso_b)->required();

    auto* repro = app.add_subcommand("reproduce", "full pipeline with golden comparison");
    std::string json_path, dot_path, nodes_arg;
    repro->add_option("--json", json_path);
    repro->add_option("--dot", dot_path);
    repro->add_option("--seed", seed);
    repro->add_option("--samples", samples);
    repro->add_flag("--skip-table4", skip_table4);
    auto* nodes_opt = repro->add_option("--nodes", nodes_arg, "comma-separated node ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            Algebra a = load_algebra(check_arg);
            auto rep = validate_structure(a);
            for (const auto& v : rep.violations) std::cout << v.kind << " " << v.detail << "\n";
            std::cout << (rep.valid() ? "valid" : std::to_string(rep.violations.size()) + " violations") << "\n";
            return rep.valid() ? 0 : 1;
        }
        if (*profile) {
            Algebra a = load_algebra(profile_arg);
            auto p = invariant_profile(a, default_grid(), default_queries(), samples, seed);
            std::cout << "orbit_dim " << p.orbit_dim << "\ngamma_rank " << p.gamma_rank << "\nderived (" << p.derived.first
                      << "," << p.derived.second << ")\ntraceless " << (p.traceless ? "yes" : "no") << "\n";
            for (const auto& [k, v] : p.ij) std::cout << "c(" << ij_key(k) << ") " << v.str() << "\n";
            for (const auto& [q, d] : p.derivation_dims) std::cout << "D" << q.str() << " " << d << "\n";
            return 0;
        }
        if (*wverify) {
            std::vector<Witness> ws;
            if (!builtin_group.empty()) ws = builtin_witnesses(builtin_group == "all" ? "" : builtin_group);
            else if (!witness_file.empty()) ws = parse_witness_file(read_file(witness_file));
            else throw ParseError("give a witness file or --builtin", 0, 0);
            int bad = 0;
            for (const auto& w : ws) {
                auto v = verify_witness(w, seed, samples);
                std::cout << (v.verified() ? "OK   " : "FAIL ") << w.id;
                if (!v.verified()) {
                    ++bad;
                    std::cout << "  " << v.failure_summary();
                }
                std::cout << "\n";
            }
            std::cout << ws.size() - bad << "/" << ws.size() << " verified\n";
            return bad ? 1 : 0;
        }
        if (*wshow) {
            for (const auto& r : witness_records())
                if (show_group.empty() || show_group == r.group) std::cout << "# " << r.group << "\n" << r.text << "\n";
            return 0;
        }
        if (*certify_cmd) {
            Algebra g = load_algebra(cert_g), h = load_algebra(cert_h);
            CertifierConfig cfg;
            cfg.seed = seed;
            auto c = certify_nondegeneration(g, h, depth, cfg);
            if (!c) {
                std::cout << "no certificate\n";
                return 1;
            }
            print_certificate(*c);
            return 0;
        }
        if (*hasse || *comps) {
            ReportOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            opt.skip_table4 = skip_table4;
            auto sg = standard_graph(opt);
            if (*hasse) {
                auto edges = hasse_reduction(sg.graph);
                for (const auto& e : edges) std::cout << e.label() << "\n";
                if (!hasse_dot.empty()) write_file(hasse_dot, to_dot(sg.graph.nodes, edges, sg.rigid));
                return 0;
            }
            auto rep = components(sg.graph, sg.rigid);
            for (const auto& c : rep.components) std::cout << c.node << "  " << c.justification << "\n";
            for (const auto& [a, b] : rep.inconclusive) std::cout << "inconclusive: " << a << " vs " << b << "\n";
            return 0;
        }
        if (*coh) {
            Algebra a = load_algebra(coh_arg);
            auto h = h2_dims(a);
            std::cout << "H2 (" << h.dim_even << "," << h.dim_odd << ")\n";
            for (int p = 0; p < 2; ++p)
                std::cout << "  parity " << p << ": dim C2 " << h.cochains[p] << ", rank d1 " << h.rank_d1[p]
                          << ", rank d2 " << h.rank_d2[p] << "\n";
            std::cout << "rigid (sufficient) " << (h.dim_even == 0 ? "yes" : "no") << "\n";
            if (show_basis) {
                for (const auto& c : h.basis_even) std::cout << "  even: " << wedge_str(c) << "\n";
                for (const auto& c : h.basis_odd) std::cout << "  odd:  " << wedge_str(c) << "\n";
            }
            if (!cocycle.empty()) {
                auto c = parse_wedge(cocycle, a.dim);
                bool cyc = is_cocycle(a, c), cob = is_coboundary(a, c);
                std::cout << wedge_str(c) << ": " << (cyc ? "cocycle" : "not a cocycle")
                          << (cyc ? (cob ? ", coboundary" : ", not a coboundary") : "") << "\n";
                return cyc && !cob ? 0 : 1;
            }
            return 0;
        }
        if (*cat_list) {
            for (const auto& n : catalog_nodes()) {
                std::cout << n.id;
                if (!n.slots.empty()) {
                    std::cout << " (";
                    for (size_t i = 0; i < n.slots.size(); ++i) std::cout << (i ? ", " : "") << n.slots[i];
                    std::cout << ")";
                }
                const auto& e = catalog_entry(n.entry);
                if (!e.iso_condition.empty() && n.id == e.name) std::cout << "  iso: " << e.iso_condition;
                std::cout << "\n";
            }
            return 0;
        }
        if (*cat_show) {
            Algebra a = load_algebra(show_arg);
            std::cout << print_algebra(a, show_arg);
            return 0;
        }
        if (*cat_iso) {
            Algebra a = load_algebra(iso_a), b = load_algebra(iso_b);
            auto iso = monomial_iso_search(a, b);
            if (!iso) {
                std::cout << "no monomial isomorphism\n";
                return 1;
            }
            auto cols = iso->columns(a.dim);
            for (int k = 0; k < a.dim.total(); ++k)
                std::cout << (k < a.dim.m ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - a.dim.m + 1)) << " = "
                          << cols[k] << "\n";
            return 0;
        }
        if (*repro) {
            ReportOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            opt.skip_table4 = skip_table4;
            if (nodes_opt->count()) {
                opt.nodes = std::vector<std::string>{};
                for (const auto& n : split_top_level(nodes_arg))
                    if (!trim(n).empty()) opt.nodes->push_back(trim(n));
            }
            auto rep = reproduce(opt);
            if (!json_path.empty()) write_file(json_path, rep.json);
            if (!dot_path.empty()) write_file(dot_path, rep.dot);
            for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
            std::cout << (rep.ok() ? "all golden expectations match" : std::to_string(rep.failures.size()) + " mismatches")
                      << "\n";
            return rep.ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
