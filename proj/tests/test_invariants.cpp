#include <gtest/gtest.h>

#include "lsdeg/catalog.hpp"
#include "lsdeg/invariants.hpp"

#include <random>

using namespace lsdeg;
using G = GaussianRational;

TEST(Oracle, OrbitDims) {
    EXPECT_EQ(orbit_dim(instantiate("LS5")), 6);
    EXPECT_EQ(orbit_dim(instantiate("LS0")), 0);
    EXPECT_EQ(orbit_dim(instantiate("LS13", {G(3), G(3)})), 2);
}

TEST(Oracle, DerivationDims) {
    EXPECT_EQ(derivation_dim(instantiate("LS0"), {G(1), G(1), G(1), 0}), 8);
    EXPECT_EQ(derivation_dim(instantiate("LS5"), {G(1), G(1), G(1), 0}), 2);
    EXPECT_EQ(derivation_dim(instantiate("LS6", {G(-1)}), {G(0), G(1), G(-1), 1}), 2);
}

TEST(Oracle, IJ) {
    EXPECT_EQ(ij_invariant(instantiate("LS8"), 1, 1), IJResult::of(G(1)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_FALSE(ij_invariant(instantiate("LS1"), i, j).exists);
    EXPECT_EQ(ij_invariant(instantiate("LS6", {G(2)}), 1, 1), IJResult::of(G(9, 5)));
    EXPECT_EQ(ij_invariant(instantiate("LS19"), 2, 2), IJResult::of(G(2)));
    EXPECT_THROW(ij_invariant(instantiate("LS8"), 0, 1), Error);
}

TEST(Oracle, Profiles) {
    auto p19 = invariant_profile(instantiate("LS19"));
    EXPECT_EQ(p19.orbit_dim, 6);
    EXPECT_EQ(p19.gamma_rank, 2);
    EXPECT_EQ(p19.derived, std::make_pair(2, 1));
    auto p17 = invariant_profile(instantiate("LS17"));
    EXPECT_EQ(p17.orbit_dim, 5);
    EXPECT_EQ(p17.gamma_rank, 1);
    EXPECT_EQ(p17.derived, std::make_pair(1, 2));
    auto p0 = invariant_profile(instantiate("LS0"));
    EXPECT_EQ(p0.orbit_dim, 0);
    EXPECT_EQ(p0.gamma_rank, 0);
    EXPECT_EQ(p0.derived, std::make_pair(0, 0));
    for (const auto& [k, v] : p0.ij) EXPECT_FALSE(v.exists);
}

TEST(Oracle, Certificates) {
    auto c = certify_nondegeneration(instantiate("LS0"), instantiate("LS3"));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->rule, Rule::OrbitDim);
    EXPECT_EQ(c->lhs_value, "0");
    EXPECT_EQ(c->rhs_value, "3");
    auto d = certify_nondegeneration(instantiate("LS5"), instantiate("LS1"));
    ASSERT_TRUE(d);
    EXPECT_EQ(gamma_rank(instantiate("LS5")), 0);
    EXPECT_EQ(gamma_rank(instantiate("LS1")), 2);
}

TEST(Property, OrbitDimFromDerivations) {
    auto plan = make_plan();
    for (const auto& n : catalog_nodes()) {
        Algebra a = n.instantiate(plan.node_samples.at(n.id).front());
        EXPECT_EQ(orbit_dim(a), 8 - derivation_dim(a, {G(1), G(1), G(1), 0})) << n.id;
    }
}

TEST(Property, NoCertificateAgainstItself) {
    auto plan = make_plan(kDefaultSeed, 2);
    for (const auto& n : catalog_nodes())
        for (const auto& s : plan.node_samples.at(n.id)) {
            Algebra a = n.instantiate(s);
            EXPECT_FALSE(certify_nondegeneration(a, a)) << n.id;
        }
}

TEST(Property, CertificatesRecheck) {
    auto plan = make_plan(kDefaultSeed, 1);
    std::vector<Algebra> as;
    for (const auto& n : catalog_nodes()) as.push_back(n.instantiate(plan.node_samples.at(n.id).front()));
    int found = 0;
    for (size_t i = 0; i < as.size(); ++i)
        for (size_t j = 0; j < as.size(); ++j) {
            if (i == j) continue;
            auto c = certify_nondegeneration(as[i], as[j]);
            if (!c) continue;
            ++found;
            EXPECT_TRUE(recheck_certificate(*c, as[i], as[j])) << c->label();
            EXPECT_FALSE(c->human_reason.empty());
        }
    EXPECT_GT(found, 300);
}

TEST(Property, IJRatioScaleInvariant) {
    std::mt19937_64 gen(7);
    auto plan = make_plan();
    for (const char* id : {"LS14", "LS6", "LS13", "LS8", "LS19"}) {
        Algebra a = catalog_node(id).instantiate(plan.node_samples.at(id).front());
        for (int rep = 0; rep < 3; ++rep) {
            Element<G> x = Element<G>::zero(a.dim), y = Element<G>::zero(a.dim);
            for (auto& v : x.even) v = draw_parameter(gen);
            for (auto& v : y.even) v = draw_parameter(gen);
            G lambda = draw_parameter(gen);
            Element<G> lx = x;
            for (auto& v : lx.even) v *= lambda;
            auto ratio = [&](const Element<G>& u, int i, int j) -> std::optional<G> {
                auto U = ad_matrix(a, u), V = ad_matrix(a, y);
                auto Ui = U, Vj = V;
                for (int k = 1; k < i; ++k) Ui = Ui * U;
                for (int k = 1; k < j; ++k) Vj = Vj * V;
                G num = Ui.trace() * Vj.trace(), den = (Ui * Vj).trace();
                if (num.is_zero() || den.is_zero()) return std::nullopt;
                return num / den;
            };
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) EXPECT_EQ(ratio(x, i, j), ratio(lx, i, j)) << id;
        }
    }
}

TEST(Property, DerivationDimsInvariantUnderIsomorphism) {
    // the odd swap exchanges the LS13 parameters
    Algebra a = instantiate("LS13", {G(2), G(-5, 3)}), b = instantiate("LS13", {G(-5, 3), G(2)});
    for (const auto& q : default_queries()) EXPECT_EQ(derivation_dim(a, q), derivation_dim(b, q)) << q.str();
}
