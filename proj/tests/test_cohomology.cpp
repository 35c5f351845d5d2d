#include <gtest/gtest.h>

#include "lsdeg/catalog.hpp"
#include "lsdeg/cohomology.hpp"
#include "lsdeg/degeneration.hpp"
#include "lsdeg/report.hpp"

#include <random>

using namespace lsdeg;
using G = GaussianRational;

namespace {

std::vector<Algebra> node_algebras(int samples) {
    auto plan = make_plan(kDefaultSeed, samples);
    std::vector<Algebra> out;
    for (const auto& n : catalog_nodes())
        for (const auto& s : plan.node_samples.at(n.id)) {
            Algebra a = n.instantiate(s);
            a.label = n.id;
            out.push_back(a);
        }
    return out;
}

// Random valid algebras: catalog members in a random constant basis.
std::vector<Algebra> random_algebras(int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto base = node_algebras(1);
    std::vector<Algebra> out;
    for (int k = 0; k < count; ++k) {
        const Algebra& a = base[gen() % base.size()];
        BasisChange g;
        for (;;) {
            g = BasisChange::identity(a.dim);
            for (auto* blk : {&g.even_block, &g.odd_block})
                for (size_t r = 0; r < blk->rows(); ++r)
                    for (size_t c = 0; c < blk->cols(); ++c) (*blk)(r, c) = RatFun(draw_parameter(gen));
            if (inverse(g.even_block) && inverse(g.odd_block)) break;
        }
        auto b = act(g, a);
        out.push_back(map_scalars<G>(b, [](const RatFun& r) { return r.constant_value(); }));
    }
    return out;
}

Cochain random_cochain(std::mt19937_64& gen, SuperDim d, int degree, int parity) {
    Cochain c = Cochain::zero(d, degree, parity);
    for (auto& x : c.coeffs) x = draw_parameter(gen);
    return c;
}

}  // namespace

TEST(Cohomology, SpaceDimensions) {
    EXPECT_EQ(cochain_space({2, 2}, 1, 0).size(), 8u);
    EXPECT_EQ(cochain_space({2, 2}, 2, 0).size(), 16u);
    EXPECT_EQ(cochain_space({2, 2}, 3, 0).size(), 24u);
}

TEST(Cohomology, RigidOracles) {
    auto h19 = h2_dims(instantiate("LS19"));
    EXPECT_EQ(std::make_pair(h19.dim_even, h19.dim_odd), std::make_pair(0, 1));
    auto h1 = h2_dims(instantiate("LS1"));
    EXPECT_EQ(std::make_pair(h1.dim_even, h1.dim_odd), std::make_pair(0, 2));
    auto h5 = h2_dims(instantiate("LS5"));
    EXPECT_EQ(std::make_pair(h5.dim_even, h5.dim_odd), std::make_pair(0, 0));
    auto h0 = h2_dims(instantiate("LS0"));
    EXPECT_EQ(std::make_pair(h0.dim_even, h0.dim_odd), std::make_pair(16, 16));
}

TEST(Cohomology, ExactlyThreeRigid) {
    std::vector<std::string> rigid;
    for (const auto& a : node_algebras(2))
        if (rigid_sufficient(a) && std::find(rigid.begin(), rigid.end(), *a.label) == rigid.end())
            rigid.push_back(*a.label);
    EXPECT_EQ(rigid, (std::vector<std::string>{"LS1", "LS5", "LS19"}));
}

TEST(Cohomology, ListedCocycles) {
    for (const auto& c : listed_cocycles()) {
        Algebra a = instantiate(c.node);
        auto z = parse_wedge(c.text, a.dim);
        EXPECT_TRUE(is_cocycle(a, z)) << c.node;
        EXPECT_FALSE(is_coboundary(a, z)) << c.node;
        EXPECT_EQ(z.parity, 1);
    }
}

TEST(Cohomology, WedgeRoundTrip) {
    std::mt19937_64 gen(5);
    for (int p = 0; p < 2; ++p)
        for (int k = 0; k < 5; ++k) {
            auto c = random_cochain(gen, {2, 2}, 2, p);
            EXPECT_EQ(parse_wedge(wedge_str(c), {2, 2}), c) << wedge_str(c);
        }
    EXPECT_THROW(parse_wedge("e1^e2 (x) f1 + e1^e2 (x) e1", {2, 2}), Error);
}

TEST(Property, DSquaredZero) {
    auto algebras = node_algebras(1);
    for (const auto& a : random_algebras(8, 31)) algebras.push_back(a);
    for (const auto& a : algebras)
        for (int p = 0; p < 2; ++p) {
            auto D1 = differential_matrix(a, 1, p), D2 = differential_matrix(a, 2, p);
            EXPECT_TRUE((D2 * D1).is_zero_matrix()) << a.label.value_or("") << " parity " << p;
        }
}

TEST(Property, DSquaredZeroOnCochains) {
    std::mt19937_64 gen(8);
    for (const auto& a : random_algebras(6, 32))
        for (int p = 0; p < 2; ++p) {
            auto phi = random_cochain(gen, a.dim, 1, p);
            auto c = d1(a, phi);
            EXPECT_TRUE(d2(a, c).is_zero());
            EXPECT_TRUE(is_cocycle(a, c));
            EXPECT_TRUE(is_coboundary(a, c));
        }
}

TEST(Property, KerD1IsEvenDerivations) {
    auto algebras = node_algebras(2);
    for (const auto& a : random_algebras(6, 33)) algebras.push_back(a);
    for (const auto& a : algebras) {
        auto D1 = differential_matrix(a, 1, 0);
        int ker = static_cast<int>(D1.cols()) - static_cast<int>(rank(D1));
        EXPECT_EQ(ker, derivation_dim(a, {G(1), G(1), G(1), 0})) << a.label.value_or("");
    }
}

TEST(Property, H2BasisIsNontrivial) {
    for (const auto& a : random_algebras(6, 34)) {
        auto h = h2_dims(a);
        EXPECT_EQ(h.basis_even.size(), static_cast<size_t>(h.dim_even));
        EXPECT_EQ(h.basis_odd.size(), static_cast<size_t>(h.dim_odd));
        for (const auto& c : h.basis_even) EXPECT_TRUE(is_cocycle(a, c));
        for (const auto& c : h.basis_odd) EXPECT_FALSE(is_coboundary(a, c));
    }
}

TEST(Property, H2InvariantUnderBasisChange) {
    std::mt19937_64 gen(40);
    for (const char* id : {"LS19", "LS1", "LS5", "LS12", "LS9"}) {
        Algebra a = instantiate(id);
        BasisChange g{Matrix<RatFun>(2, 2), Matrix<RatFun>(2, 2)};
        for (;;) {
            for (auto* blk : {&g.even_block, &g.odd_block})
                for (size_t r = 0; r < 2; ++r)
                    for (size_t c = 0; c < 2; ++c) (*blk)(r, c) = RatFun(draw_parameter(gen));
            if (inverse(g.even_block) && inverse(g.odd_block)) break;
        }
        Algebra b = map_scalars<G>(act(g, a), [](const RatFun& r) { return r.constant_value(); });
        auto ha = h2_dims(a), hb = h2_dims(b);
        EXPECT_EQ(ha.dim_even, hb.dim_even) << id;
        EXPECT_EQ(ha.dim_odd, hb.dim_odd) << id;
    }
}
