#include "lsdeg/algebra_io.hpp"
#include "lsdeg/expr.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace lsdeg {

std::string basis_name(SuperDim d, int idx) {
    return idx < d.m ? "e" + std::to_string(idx + 1) : "f" + std::to_string(idx - d.m + 1);
}

int basis_index(SuperDim d, const std::string& name) {
    if (name.size() < 2 || (name[0] != 'e' && name[0] != 'f')) return -1;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    int k = std::stoi(name.substr(1));
    if (name[0] == 'e') return (k >= 1 && k <= d.m) ? k - 1 : -1;
    return (k >= 1 && k <= d.n) ? d.m + k - 1 : -1;
}

std::string functor_name(Functor f) {
    switch (f) {
        case Functor::A: return "A";
        case Functor::Ab: return "ab";
        case Functor::F: return "F";
    }
    return "?";
}

bool ParsedAlgebra::is_constant() const {
    auto all_const = [](const std::vector<RatFun>& v) {
        for (const auto& x : v)
            if (!x.is_constant()) return false;
        return true;
    };
    return all_const(algebra.sc.c_data()) && all_const(algebra.sc.rho_data()) && all_const(algebra.sc.gamma_data());
}

Algebra ParsedAlgebra::constant_algebra() const {
    if (!is_constant()) throw Error("algebra '" + name + "' depends on t");
    return map_scalars<GaussianRational>(algebra, [](const RatFun& r) { return r.constant_value(); });
}

ParsedAlgebra parse_algebra(const std::string& text) {
    ParsedAlgebra out;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    ExprEnv env;
    std::vector<std::pair<int, int>> seen;
    static const std::regex header(R"(^\s*superalgebra\s+(\S+)\s+dim\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    static const std::regex product(R"(^\s*\[\s*([A-Za-z]\w*)\s*,\s*([A-Za-z]\w*)\s*\]\s*=(.*)$)");
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::smatch mt;
        if (!have_header) {
            if (!std::regex_match(line, mt, header))
                throw ParseError("expected 'superalgebra <name> dim (<m>,<n>)'", line_no, 1);
            out.name = mt[1];
            SuperDim d{std::stoi(mt[2]), std::stoi(mt[3])};
            out.algebra = AlgebraT(d, out.name);
            for (int i = 0; i < d.total(); ++i) env.basis.insert(basis_name(d, i));
            have_header = true;
            continue;
        }
        if (line == "param t") {
            out.has_param = true;
            continue;
        }
        if (line.rfind("uses_sqrt", 0) == 0) {
            std::string v = trim(line.substr(9));
            if (v != "true" && v != "false") throw ParseError("uses_sqrt expects true or false", line_no, 11);
            out.uses_sqrt = v == "true";
            env.sqrt_mode = out.uses_sqrt;
            continue;
        }
        if (!std::regex_match(line, mt, product)) throw ParseError("unrecognised line", line_no, 1);
        const SuperDim d = out.algebra.dim;
        int a = basis_index(d, mt[1]), b = basis_index(d, mt[2]);
        size_t col = raw.find('[') + 2;
        if (a < 0) throw ParseError("unknown basis element '" + std::string(mt[1]) + "'", line_no, static_cast<int>(col));
        if (b < 0) throw ParseError("unknown basis element '" + std::string(mt[2]) + "'", line_no, static_cast<int>(col));
        if (a == b && a < d.m) throw ParseError("[x,x] vanishes for even x", line_no, static_cast<int>(col));
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        for (const auto& s : seen)
            if (s == key) throw ParseError("product given twice", line_no, static_cast<int>(col));
        seen.push_back(key);
        std::string rhs = mt[3];
        int rhs_col = static_cast<int>(raw.find('=')) + 2;
        LinComb lc = parse_lincomb(rhs, env, line_no, rhs_col);
        std::vector<RatFun> v(d.total(), RatFun(0));
        const int want = (a < d.m) == (b < d.m) ? 0 : 1;
        for (const auto& [nm, c] : lc) {
            int k = basis_index(d, nm);
            if ((k >= d.m ? 1 : 0) != want)
                throw ParseError("product has the wrong parity for '" + nm + "'", line_no, rhs_col);
            v[k] = c;
        }
        out.algebra.set_product(a, b, v);
    }
    if (!have_header) throw ParseError("missing 'superalgebra' header", line_no + 1, 1);
    if (!out.has_param && !out.is_constant()) throw ParseError("constants use t without 'param t'", line_no, 1);
    return out;
}

ParsedAlgebra read_algebra_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path, 0, 0);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_algebra(ss.str());
}

namespace {

std::string coeff_prefix(const std::string& c) {
    if (c == "1") return "";
    if (c == "-1") return "-";
    static const std::regex simple(R"(^-?(\d+(/\d+)?i?|i)$)");
    return (std::regex_match(c, simple) ? c : "(" + c + ")") + " ";
}

template <class S>
std::string combination(SuperDim d, const std::vector<S>& v) {
    std::string out;
    for (int k = 0; k < d.total(); ++k) {
        if (is_zero(v[k])) continue;
        std::string term = coeff_prefix(v[k].str()) + basis_name(d, k);
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

template <class S>
std::string print_impl(const SuperAlgebra<S>& a, const std::string& name, const std::string& extra) {
    std::string out = "superalgebra " + name + " dim (" + std::to_string(a.dim.m) + "," + std::to_string(a.dim.n) + ")\n";
    out += extra;
    const int N = a.size();
    for (int x = 0; x < N; ++x)
        for (int y = x; y < N; ++y) {
            if (x == y && x < a.dim.m) continue;
            auto p = a.product(x, y);
            bool nz = false;
            for (const auto& c : p) nz = nz || !is_zero(c);
            if (!nz) continue;
            out += "[" + basis_name(a.dim, x) + "," + basis_name(a.dim, y) + "] = " + combination(a.dim, p) + "\n";
        }
    return out;
}

}  // namespace

std::string format_combination(SuperDim d, const std::vector<GaussianRational>& v) {
    return combination(d, v);
}

std::string format_combination(SuperDim d, const std::vector<RatFun>& v) {
    return combination(d, v);
}

std::string print_algebra(const Algebra& a, const std::string& name) {
    return print_impl(a, name, "");
}

std::string print_algebra(const AlgebraT& a, const std::string& name, bool uses_sqrt) {
    std::string extra = "param t\n";
    if (uses_sqrt) extra += "uses_sqrt true\n";
    return print_impl(a, name, extra);
}

}  // namespace lsdeg
