#include "lsdeg/degeneration.hpp"

#include "lsdeg/expr.hpp"

#include <random>
#include <regex>
#include <sstream>

namespace lsdeg {

BasisChange BasisChange::identity(SuperDim d) {
    return {Matrix<RatFun>::identity(d.m), Matrix<RatFun>::identity(d.n)};
}

BasisChange BasisChange::scalar(SuperDim d, const RatFun& c) {
    BasisChange g = identity(d);
    for (int i = 0; i < d.m; ++i) g.even_block(i, i) = c;
    for (int i = 0; i < d.n; ++i) g.odd_block(i, i) = c;
    return g;
}

BasisChange BasisChange::inverse() const {
    auto e = lsdeg::inverse(even_block);
    if (!e) throw SingularBlock("even block is singular");
    auto o = lsdeg::inverse(odd_block);
    if (!o) throw SingularBlock("odd block is singular");
    return {*e, *o};
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

bool is_basis_symbol(const std::string& s) {
    static const std::regex basis(R"([ef]\d+)");
    return std::regex_match(s, basis);
}

CatalogRef parse_ref(const std::string& name, const std::string& params, bool has_params) {
    CatalogRef r{name, {}};
    if (has_params)
        for (auto& p : split_top_level(params)) r.params.push_back(trim(p));
    return r;
}

}  // namespace

std::string CatalogRef::str() const { return params.empty() ? entry : entry + "[" + join(params) + "]"; }

std::vector<std::string> Witness::free_symbols() const {
    std::set<std::string> syms;
    auto add = [&](const std::string& e) {
        for (auto& s : expression_symbols(e))
            if (!is_basis_symbol(s)) syms.insert(s);
    };
    for (auto& p : source.params) add(p);
    for (auto& p : target.params) add(p);
    for (auto& [_, e] : binds) add(e);
    for (auto& c : columns) add(c);
    for (auto& [name, _] : binds) syms.erase(name);
    return {syms.begin(), syms.end()};
}

std::vector<Witness> parse_witness_file(const std::string& text) {
    static const std::regex header(
        R"(^\s*witness\s+(\w+)\s*(\[([^\]]*)\])?\s*->\s*(\w+)\s*(\[([^\]]*)\])?\s*$)");
    static const std::regex sqrt_line(R"(^\s*uses_sqrt\s+(\S+)\s*$)");
    static const std::regex bind_line(R"(^\s*bind\s+([A-Za-z]\w*)\s*=(.*)$)");
    static const std::regex column_line(R"(^\s*([xy])(\d+)\s*=(.*)$)");
    std::vector<Witness> out;
    std::vector<std::map<int, std::string>> even, odd;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto finish = [&] {
        if (out.empty()) return;
        Witness& w = out.back();
        auto& ev = even.back();
        auto& od = odd.back();
        int m = ev.empty() ? 0 : ev.rbegin()->first, n = od.empty() ? 0 : od.rbegin()->first;
        if (static_cast<int>(ev.size()) != m || static_cast<int>(od.size()) != n)
            throw ParseError("witness " + w.id + " has a gap in its basis vectors", line_no, 1);
        for (auto& [_, c] : ev) w.columns.push_back(c);
        for (auto& [_, c] : od) w.columns.push_back(c);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::smatch mt;
        if (std::regex_match(line, mt, header)) {
            finish();
            Witness w;
            w.source = parse_ref(mt[1], mt[3], mt[2].matched);
            w.target = parse_ref(mt[4], mt[6], mt[5].matched);
            w.id = w.source.str() + "->" + w.target.str();
            out.push_back(std::move(w));
            even.emplace_back();
            odd.emplace_back();
            continue;
        }
        if (out.empty()) throw ParseError("expected 'witness <source> -> <target>'", line_no, 1);
        Witness& w = out.back();
        if (std::regex_match(line, mt, sqrt_line)) {
            if (mt[1] != "true" && mt[1] != "false") throw ParseError("uses_sqrt expects true or false", line_no, 11);
            w.uses_sqrt = mt[1] == "true";
        } else if (std::regex_match(line, mt, bind_line)) {
            w.binds.emplace_back(mt[1], trim(std::string(mt[2])));
        } else if (std::regex_match(line, mt, column_line)) {
            int idx = std::stoi(mt[2]);
            auto& slot = mt[1] == "x" ? even.back() : odd.back();
            if (idx < 1 || slot.count(idx))
                throw ParseError("duplicate or invalid basis vector " + std::string(mt[1]) + std::string(mt[2]), line_no, 1);
            slot[idx] = trim(std::string(mt[3]));
        } else {
            throw ParseError("unrecognised line", line_no, 1);
        }
    }
    finish();
    return out;
}

Witness parse_witness(const std::string& text) {
    auto all = parse_witness_file(text);
    if (all.size() != 1) throw ParseError("expected exactly one witness", 1, 1);
    return all.front();
}

std::string print_witness(const Witness& w) {
    std::ostringstream os;
    os << "witness " << w.source.str() << " -> " << w.target.str() << "\n";
    os << "uses_sqrt " << (w.uses_sqrt ? "true" : "false") << "\n";
    for (auto& [name, e] : w.binds) os << "bind " << name << " = " << e << "\n";
    SuperDim d = w.explicit_source ? w.explicit_source->dim : SuperDim{2, 2};
    for (int k = 0; k < static_cast<int>(w.columns.size()); ++k) {
        if (k < d.m) os << "x" << k + 1;
        else os << "y" << k - d.m + 1;
        os << " = " << w.columns[k] << "\n";
    }
    return os.str();
}

namespace {

Witness scaling_columns(Witness w, SuperDim d) {
    for (int k = 0; k < d.total(); ++k) w.columns.push_back("t " + basis_name(d, k));
    return w;
}

}  // namespace

Witness trivial_scaling_witness(const Algebra& a) {
    Witness w;
    w.source = {a.label.value_or("custom"), {}};
    w.target = {"LS0", {}};
    w.id = "scale:" + w.source.entry;
    w.explicit_source = a;
    return scaling_columns(std::move(w), a.dim);
}

Witness trivial_scaling_witness(const CatalogNode& n) {
    Witness w;
    w.source.entry = n.entry;
    for (size_t i = 0; i < n.slot_of.size(); ++i)
        w.source.params.push_back(n.slot_of[i] >= 0 ? n.slots[n.slot_of[i]] : n.fixed[i].str());
    w.target = {"LS0", {}};
    w.id = "scale:" + n.id;
    return scaling_columns(std::move(w), {2, 2});
}

WitnessInstance instantiate_witness(const Witness& w, const std::map<std::string, GaussianRational>& values) {
    ExprEnv env;
    env.sqrt_mode = w.uses_sqrt;
    for (auto& s : w.free_symbols()) {
        auto it = values.find(s);
        if (it == values.end()) throw Error("no value for parameter '" + s + "'");
        env.symbols[s] = RatFun(it->second);
    }
    for (auto& [name, e] : w.binds) env.symbols[name] = parse_scalar(e, env);

    WitnessInstance inst;
    if (w.explicit_source) {
        inst.source = to_ratfun(*w.explicit_source);
    } else {
        for (auto& p : w.source.params) inst.source_params.push_back(parse_scalar(p, env));
        inst.source = instantiate_as<RatFun>(w.source.entry, inst.source_params);
    }
    const SuperDim d = inst.source.dim;
    for (auto& p : w.target.params) {
        RatFun r = parse_scalar(p, env);
        if (!r.is_constant()) throw Error("target parameter '" + p + "' depends on t");
        inst.target_params.push_back(r.constant_value());
    }
    if (w.explicit_source && w.target.entry == "LS0") inst.target = Algebra(d, std::string("LS0"));
    else inst.target = instantiate(w.target.entry, inst.target_params);
    if (inst.target.dim != d) throw DimensionMismatch("source and target dimensions differ");
    if (static_cast<int>(w.columns.size()) != d.total()) throw DimensionMismatch("witness needs one vector per basis element");

    for (int k = 0; k < d.total(); ++k) env.basis.insert(basis_name(d, k));
    BasisChange p{Matrix<RatFun>(d.m, d.m), Matrix<RatFun>(d.n, d.n)};
    for (int col = 0; col < d.total(); ++col) {
        LinComb lc = parse_lincomb(w.columns[col], env);
        for (auto& [name, coeff] : lc) {
            int idx = basis_index(d, name);
            bool col_even = col < d.m, row_even = idx < d.m;
            if (col_even != row_even)
                throw Error("basis vector " + std::to_string(col + 1) + " of witness " + w.id + " mixes parities");
            if (col_even) p.even_block(idx, col) = coeff;
            else p.odd_block(idx - d.m, col - d.m) = coeff;
        }
    }
    inst.change = p.inverse();
    return inst;
}

namespace {

std::string constant_name(SuperDim d, int i, int j, int k) {
    return "[" + basis_name(d, i) + "," + basis_name(d, j) + "] coefficient of " + basis_name(d, k);
}

}  // namespace

WitnessVerdict verify_witness_at(const Witness& w, const std::map<std::string, GaussianRational>& values) {
    WitnessVerdict v;
    v.values = values;
    WitnessInstance inst;
    try {
        inst = instantiate_witness(w, values);
    } catch (const SingularBlock& e) {
        v.failure = "SingularBlock";
        v.detail = e.what();
        return v;
    }
    v.target_params = inst.target_params;
    v.target_node = w.explicit_source ? "LS0" : classify(w.target.entry, inst.target_params);
    if (w.explicit_source) {
        v.source_node = w.source.entry;
    } else {
        bool constant = true;
        for (auto& p : inst.source_params) constant = constant && p.is_constant();
        if (constant) {
            for (auto& p : inst.source_params) v.source_params.push_back(p.constant_value());
            v.source_node = classify(w.source.entry, v.source_params);
        } else {
            v.source_node = generic_node(w.source.entry);
        }
    }

    AlgebraT moved = act(inst.change, inst.source);
    const SuperDim d = moved.dim;
    const int N = d.total();
    Algebra limit(d, inst.target.label);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            auto prod = moved.product(i, j);
            std::vector<GaussianRational> lim(N);
            for (int k = 0; k < N; ++k) {
                auto val = prod[k].valuation_at_zero();
                if (val && *val < 0) {
                    v.failure = "PoleAtZero";
                    v.detail = constant_name(d, i, j, k) + " diverges: " + prod[k].str(w.uses_sqrt ? "s" : "t");
                    return v;
                }
                lim[k] = prod[k].limit_at_zero();
            }
            if (i == j && i < d.m) continue;
            limit.set_product(i, j, lim);
        }
    v.limit = limit;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            auto got = limit.product(i, j), want = inst.target.product(i, j);
            for (int k = 0; k < N; ++k)
                if (got[k] != want[k]) {
                    v.failure = "LimitMismatch";
                    v.detail = constant_name(d, i, j, k) + ": limit " + got[k].str() + ", target " + want[k].str();
                    return v;
                }
        }
    v.ok = true;
    return v;
}

bool VerifiedDegeneration::verified() const {
    if (samples.empty()) return false;
    for (auto& s : samples)
        if (!s.ok) return false;
    return true;
}

std::string VerifiedDegeneration::failure_summary() const {
    for (auto& s : samples)
        if (!s.ok) return s.failure + ": " + s.detail;
    return samples.empty() ? "no admissible parameter samples" : "";
}

VerifiedDegeneration verify_witness(const Witness& w, std::uint64_t seed, int samples) {
    VerifiedDegeneration out{w, {}};
    auto syms = w.free_symbols();
    if (syms.empty()) {
        out.samples.push_back(verify_witness_at(w, {}));
        return out;
    }
    std::mt19937_64 gen(derive_seed(seed, w.id));
    int attempts = 0;
    while (static_cast<int>(out.samples.size()) < samples && attempts++ < 50 * samples) {
        std::map<std::string, GaussianRational> values;
        for (auto& s : syms) values[s] = draw_parameter(gen);
        WitnessVerdict v;
        try {
            v = verify_witness_at(w, values);
        } catch (const DivisionByZero&) {
            continue;
        } catch (const EvalAtPole&) {
            continue;
        } catch (const ExcludedParameter&) {
            continue;
        }
        if (!out.samples.empty() &&
            (v.source_node != out.samples.front().source_node || v.target_node != out.samples.front().target_node))
            continue;
        out.samples.push_back(std::move(v));
    }
    return out;
}

}  // namespace lsdeg
