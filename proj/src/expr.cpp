#include "lsdeg/expr.hpp"

#include "lsdeg/errors.hpp"

#include <cctype>
#include <optional>

namespace lsdeg {

namespace {

enum class Tok { Num, Ident, Op, End };

struct Token {
    Tok kind;
    std::string text;
    int pos;
};

std::vector<Token> tokenize(std::string_view s, int line, int col0) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Num, std::string(s.substr(i, j - i)), pos});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), pos});
            i = j;
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Tok::Op, std::string(1, c), pos});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col0 + pos);
        }
    }
    out.push_back({Tok::End, "", static_cast<int>(s.size())});
    return out;
}

struct Value {
    bool is_vec = false;
    RatFun s;
    LinComb v;
};

void add_into(LinComb& a, const LinComb& b, bool subtract) {
    for (const auto& [k, c] : b) {
        RatFun& slot = a[k];
        slot = subtract ? slot - c : slot + c;
        if (slot.is_zero()) a.erase(k);
    }
}

class Parser {
public:
    Parser(std::string_view text, const ExprEnv& env, int line, int col0)
        : toks_(tokenize(text, line, col0)), env_(env), line_(line), col0_(col0) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + peek().pos); }

    Value expr() {
        bool neg = false;
        if (is_op("+") || is_op("-")) {
            neg = peek().text == "-";
            ++pos_;
        }
        Value acc = term();
        if (neg) acc = negate(acc);
        while (is_op("+") || is_op("-")) {
            bool sub = peek().text == "-";
            ++pos_;
            Value rhs = term();
            acc = add(acc, rhs, sub);
        }
        return acc;
    }

    bool starts_primary() const {
        const Token& t = peek();
        return t.kind == Tok::Num || t.kind == Tok::Ident || (t.kind == Tok::Op && t.text == "(");
    }

    Value term() {
        Value acc = power();
        while (true) {
            if (is_op("*")) {
                ++pos_;
                acc = mul(acc, power());
            } else if (is_op("/")) {
                ++pos_;
                acc = div(acc, power());
            } else if (starts_primary()) {
                acc = mul(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    Value power() {
        Value base = primary();
        if (!is_op("^")) return base;
        ++pos_;
        bool neg = false;
        if (is_op("-") || is_op("+")) {
            neg = peek().text == "-";
            ++pos_;
        }
        if (peek().kind != Tok::Num) fail("expected integer exponent");
        long e = std::stol(peek().text);
        ++pos_;
        if (base.is_vec) fail("cannot raise a basis vector to a power");
        try {
            base.s = base.s.pow(neg ? -e : e);
        } catch (const DivisionByZero&) {
            fail("negative power of zero");
        }
        return base;
    }

    Value primary() {
        const Token t = peek();
        if (t.kind == Tok::Num) {
            ++pos_;
            Value v;
            v.s = RatFun(GaussianRational(Rational(t.text)));
            return v;
        }
        if (t.kind == Tok::Op && t.text == "(") {
            ++pos_;
            Value v = expr();
            if (!is_op(")")) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (t.kind == Tok::Ident) {
            ++pos_;
            if (t.text == "sqrt") return sqrt_call();
            Value v;
            if (t.text == "i") {
                v.s = RatFun(GaussianRational::i());
            } else if (t.text == "t") {
                v.s = env_.sqrt_mode ? RatFun(Poly::monomial(GaussianRational(1), 2)) : RatFun::var();
            } else if (auto it = env_.symbols.find(t.text); it != env_.symbols.end()) {
                v.s = it->second;
            } else if (env_.basis.count(t.text)) {
                v.is_vec = true;
                v.v[t.text] = RatFun(1);
            } else {
                --pos_;
                fail("unknown symbol '" + t.text + "'");
            }
            return v;
        }
        fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }

    Value sqrt_call() {
        if (!is_op("(")) fail("expected '(' after sqrt");
        ++pos_;
        int at = pos_;
        Value arg = expr();
        if (!is_op(")")) fail("expected ')'");
        ++pos_;
        RatFun tval = RatFun(Poly::monomial(GaussianRational(1), 2));
        if (!env_.sqrt_mode || arg.is_vec || arg.s != tval) {
            pos_ = at;
            fail("sqrt is only available as sqrt(t) in a uses_sqrt context");
        }
        Value v;
        v.s = RatFun::var();
        return v;
    }

    Value negate(Value a) {
        if (a.is_vec) {
            for (auto& [k, c] : a.v) c = -c;
        } else {
            a.s = -a.s;
        }
        return a;
    }

    Value add(Value a, const Value& b, bool sub) {
        if (a.is_vec != b.is_vec) {
            // a literal zero scalar may be combined with a vector
            if (!a.is_vec && a.s.is_zero()) return sub ? negate(b) : b;
            if (!b.is_vec && b.s.is_zero()) return a;
            fail("cannot add a scalar and a basis vector");
        }
        if (a.is_vec) add_into(a.v, b.v, sub);
        else a.s = sub ? a.s - b.s : a.s + b.s;
        return a;
    }

    Value mul(Value a, const Value& b) {
        if (a.is_vec && b.is_vec) fail("cannot multiply two basis vectors");
        if (!a.is_vec && !b.is_vec) {
            a.s *= b.s;
            return a;
        }
        const Value& vec = a.is_vec ? a : b;
        const RatFun& k = a.is_vec ? b.s : a.s;
        Value out;
        out.is_vec = true;
        for (const auto& [name, c] : vec.v) {
            RatFun p = c * k;
            if (!p.is_zero()) out.v[name] = p;
        }
        return out;
    }

    Value div(Value a, const Value& b) {
        if (b.is_vec) fail("cannot divide by a basis vector");
        if (b.s.is_zero()) fail("division by zero");
        if (a.is_vec) {
            for (auto& [k, c] : a.v) c /= b.s;
        } else {
            a.s /= b.s;
        }
        return a;
    }

    std::vector<Token> toks_;
    const ExprEnv& env_;
    int line_;
    int col0_;
    int pos_ = 0;
};

}  // namespace

RatFun parse_scalar(std::string_view text, const ExprEnv& env, int line, int column) {
    Parser p(text, env, line, column);
    Value v = p.parse_all();
    if (v.is_vec) throw ParseError("expected a scalar, got a basis combination", line, column);
    return v.s;
}

LinComb parse_lincomb(std::string_view text, const ExprEnv& env, int line, int column) {
    Parser p(text, env, line, column);
    Value v = p.parse_all();
    if (!v.is_vec) {
        if (v.s.is_zero()) return {};
        throw ParseError("expected a combination of basis vectors", line, column);
    }
    return v.v;
}

std::set<std::string> expression_symbols(std::string_view text) {
    std::set<std::string> out;
    for (const auto& tok : tokenize(text, 1, 1))
        if (tok.kind == Tok::Ident && tok.text != "t" && tok.text != "i" && tok.text != "sqrt") out.insert(tok.text);
    return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace lsdeg
