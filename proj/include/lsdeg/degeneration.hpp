#pragma once

#include "lsdeg/catalog.hpp"
#include "lsdeg/superalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lsdeg {

// g = even_block (+) odd_block acting by g.[x,y] = g[g^-1 x, g^-1 y].
struct BasisChange {
    Matrix<RatFun> even_block;
    Matrix<RatFun> odd_block;

    static BasisChange identity(SuperDim d);
    static BasisChange scalar(SuperDim d, const RatFun& c);
    SuperDim dim() const { return {static_cast<int>(even_block.rows()), static_cast<int>(odd_block.rows())}; }
    BasisChange inverse() const;
    friend BasisChange operator*(const BasisChange& a, const BasisChange& b) {
        return {a.even_block * b.even_block, a.odd_block * b.odd_block};
    }
};

template <class S>
AlgebraT act(const BasisChange& g, const SuperAlgebra<S>& a) {
    AlgebraT src = map_scalars<RatFun>(a, [](const S& z) { return RatFun(z); });
    if (g.dim() != a.dim) throw DimensionMismatch("basis change does not match algebra dimension");
    BasisChange ginv = g.inverse();
    const SuperDim d = a.dim;
    const int N = d.total();
    auto column = [&](int idx) {
        std::vector<RatFun> v(N, RatFun(0));
        if (idx < d.m)
            for (int r = 0; r < d.m; ++r) v[r] = ginv.even_block(r, idx);
        else
            for (int r = 0; r < d.n; ++r) v[d.m + r] = ginv.odd_block(r, idx - d.m);
        return v;
    };
    auto apply_g = [&](const std::vector<RatFun>& w) {
        std::vector<RatFun> ev(w.begin(), w.begin() + d.m), od(w.begin() + d.m, w.end());
        auto e = g.even_block.apply(ev);
        auto o = g.odd_block.apply(od);
        e.insert(e.end(), o.begin(), o.end());
        return e;
    };
    AlgebraT out(d, a.label);
    std::vector<std::vector<RatFun>> cols;
    for (int i = 0; i < N; ++i) cols.push_back(column(i));
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            if (i == j && i < d.m) continue;
            out.set_product(i, j, apply_g(bracket_full(src, cols[i], cols[j])));
        }
    return out;
}

struct CatalogRef {
    std::string entry;
    std::vector<std::string> params;  // expression text
    std::string str() const;
};

// Columns are the new basis x1.., y1.. written in the old basis.
struct Witness {
    std::string id;
    CatalogRef source;
    CatalogRef target;
    bool uses_sqrt = false;
    std::vector<std::pair<std::string, std::string>> binds;
    std::vector<std::string> columns;
    std::optional<Algebra> explicit_source;

    // Symbols that are sampled: parameters not bound to expressions in t.
    std::vector<std::string> free_symbols() const;
    bool binds_family() const { return !binds.empty(); }
};

Witness parse_witness(const std::string& text);
std::vector<Witness> parse_witness_file(const std::string& text);
std::string print_witness(const Witness& w);

Witness trivial_scaling_witness(const Algebra& a);
Witness trivial_scaling_witness(const CatalogNode& n);

struct WitnessInstance {
    AlgebraT source;
    Algebra target;
    BasisChange change;  // the group element g = P^-1
    std::vector<RatFun> source_params;
    std::vector<GaussianRational> target_params;
};

WitnessInstance instantiate_witness(const Witness& w, const std::map<std::string, GaussianRational>& values);

struct WitnessVerdict {
    bool ok = false;
    std::string failure;  // PoleAtZero, LimitMismatch, SingularBlock, ...
    std::string detail;
    std::map<std::string, GaussianRational> values;
    std::string source_node;
    std::string target_node;
    std::vector<GaussianRational> source_params;  // empty when the source is bound to t
    std::vector<GaussianRational> target_params;
    std::optional<Algebra> limit;
};

WitnessVerdict verify_witness_at(const Witness& w, const std::map<std::string, GaussianRational>& values);

struct VerifiedDegeneration {
    Witness witness;
    std::vector<WitnessVerdict> samples;
    bool verified() const;
    std::string failure_summary() const;
};

VerifiedDegeneration verify_witness(const Witness& w, std::uint64_t seed = kDefaultSeed, int samples = 5);

// New basis x_i = scale[i] * b_perm[i]; a parity-preserving monomial basis change.
struct MonomialIso {
    std::vector<int> perm;
    std::vector<GaussianRational> scale;

    BasisChange change(SuperDim d) const;
    std::vector<std::string> columns(SuperDim d) const;
};

// Searches permutations times diagonal scalings with act(change, a) == b; scalings are solved exactly.
std::optional<MonomialIso> monomial_iso_search(const Algebra& a, const Algebra& b);

// Built-in witnesses; group is "orbit", "family", "refuted" or "iso".
struct WitnessRecord {
    const char* group;
    const char* text;
};
const std::vector<WitnessRecord>& witness_records();
std::vector<Witness> builtin_witnesses(const std::string& group);

}  // namespace lsdeg
