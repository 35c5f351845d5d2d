#include <gtest/gtest.h>

#include "lsdeg/catalog.hpp"
#include "lsdeg/degeneration.hpp"

#include <random>

using namespace lsdeg;
using G = GaussianRational;

namespace {

Matrix<RatFun> random_block(std::mt19937_64& gen, int n, bool with_t) {
    std::uniform_int_distribution<int> coin(0, 2);
    for (;;) {
        Matrix<RatFun> m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                RatFun v(draw_parameter(gen));
                if (with_t && coin(gen) == 0) v *= RatFun::var();
                m(r, c) = v;
            }
        if (inverse(m)) return m;
    }
}

BasisChange random_change(std::mt19937_64& gen, SuperDim d, bool with_t = false) {
    return {random_block(gen, d.m, with_t), random_block(gen, d.n, with_t)};
}

std::vector<Algebra> sample_algebras() {
    auto plan = make_plan(kDefaultSeed, 1);
    std::vector<Algebra> out;
    for (const auto& n : catalog_nodes()) out.push_back(n.instantiate(plan.node_samples.at(n.id).front()));
    return out;
}

}  // namespace

TEST(Witness, DatabaseShape) {
    EXPECT_EQ(builtin_witnesses("orbit").size(), 34u);
    EXPECT_EQ(builtin_witnesses("family").size(), 6u);
    EXPECT_EQ(builtin_witnesses("refuted").size(), 2u);
    EXPECT_EQ(builtin_witnesses("iso").size(), 3u);
    int sqrt_rows = 0;
    for (const auto& w : builtin_witnesses("orbit")) sqrt_rows += w.uses_sqrt;
    EXPECT_EQ(sqrt_rows, 3);
}

TEST(Witness, OrbitRowsVerify) {
    for (const auto& w : builtin_witnesses("orbit")) {
        auto v = verify_witness(w);
        EXPECT_TRUE(v.verified()) << w.id << " " << v.failure_summary();
    }
}

TEST(Witness, FamilyRowsVerify) {
    for (const auto& w : builtin_witnesses("family")) {
        auto v = verify_witness(w);
        EXPECT_TRUE(v.verified()) << w.id << " " << v.failure_summary();
        EXPECT_TRUE(w.binds_family());
    }
}

TEST(Witness, RefutedRowsFailWithLimitMismatch) {
    for (const auto& w : builtin_witnesses("refuted")) {
        auto v = verify_witness(w);
        ASSERT_FALSE(v.verified()) << w.id;
        EXPECT_EQ(v.samples.front().failure, "LimitMismatch");
    }
}

TEST(Witness, WorkedExample) {
    auto w = parse_witness("witness LS19 -> LS4\nuses_sqrt true\nx1 = t e1\nx2 = 2t e2\ny1 = sqrt(t) f1\ny2 = sqrt(t) f2\n");
    auto v = verify_witness_at(w, {});
    ASSERT_TRUE(v.ok) << v.detail;
    EXPECT_EQ(*v.limit, instantiate("LS4"));
}

TEST(Witness, SqrtFamilyRow) {
    auto ws = builtin_witnesses("family");
    auto it = std::find_if(ws.begin(), ws.end(), [](const Witness& w) { return w.target.entry == "LS17"; });
    ASSERT_NE(it, ws.end());
    EXPECT_TRUE(it->uses_sqrt);
    EXPECT_TRUE(verify_witness_at(*it, {}).ok);
}

TEST(Witness, FailuresAreClassified) {
    auto pole = parse_witness("witness LS1 -> LS0\nx1 = t e1\nx2 = e2\ny1 = 1/t f1\ny2 = f2\n");
    auto v = verify_witness_at(pole, {});
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.failure, "PoleAtZero");
    auto sing = parse_witness("witness LS1 -> LS0\nx1 = e1\nx2 = e1\ny1 = f1\ny2 = f2\n");
    EXPECT_EQ(verify_witness_at(sing, {}).failure, "SingularBlock");
}

TEST(Witness, PrintParseRoundTrip) {
    for (const auto& r : witness_records()) {
        Witness w = parse_witness(r.text);
        Witness back = parse_witness(print_witness(w));
        EXPECT_EQ(back.id, w.id);
        EXPECT_EQ(back.columns, w.columns);
        EXPECT_EQ(back.binds, w.binds);
        EXPECT_EQ(back.uses_sqrt, w.uses_sqrt);
        EXPECT_EQ(print_witness(back), print_witness(w));
    }
}

TEST(Witness, ParseErrors) {
    auto bad = parse_witness("witness LS19 -> LS4\nx1 = t e9\nx2 = e2\ny1 = f1\ny2 = f2\n");
    EXPECT_THROW(verify_witness_at(bad, {}), ParseError);
    EXPECT_THROW(parse_witness("x1 = e1\n"), ParseError);
}

TEST(Property, ActionComposition) {
    std::mt19937_64 gen(11);
    for (const auto& a : sample_algebras()) {
        auto g1 = random_change(gen, a.dim, true), g2 = random_change(gen, a.dim);
        EXPECT_EQ(act(g1 * g2, a), act(g1, act(g2, a))) << a.label.value_or("");
        EXPECT_EQ(act(BasisChange::identity(a.dim), a), to_ratfun(a));
    }
}

TEST(Property, ActionPreservesValidity) {
    std::mt19937_64 gen(12);
    for (const auto& a : sample_algebras()) {
        auto b = act(random_change(gen, a.dim, true), a);
        EXPECT_TRUE(validate_structure(b).valid()) << a.label.value_or("");
    }
}

TEST(Property, FunctorEquivariance) {
    std::mt19937_64 gen(13);
    for (const auto& a : sample_algebras()) {
        auto g = random_change(gen, a.dim);
        for (auto f : {Functor::A, Functor::Ab, Functor::F})
            EXPECT_EQ(act(g, functor_apply(a, f)), functor_apply(act(g, a), f))
                << a.label.value_or("") << " " << functor_name(f);
    }
}

TEST(Property, TrivialScalingReachesZero) {
    auto plan = make_plan(kDefaultSeed, 5);
    for (const auto& n : catalog_nodes())
        for (const auto& s : plan.node_samples.at(n.id)) {
            Algebra a = n.instantiate(s);
            auto v = verify_witness_at(trivial_scaling_witness(a), {});
            EXPECT_TRUE(v.ok) << n.id << " " << v.detail;
            EXPECT_EQ(*v.limit, instantiate("LS0"));
        }
    for (const auto& n : catalog_nodes()) EXPECT_TRUE(verify_witness(trivial_scaling_witness(n)).verified()) << n.id;
}

TEST(Property, MonotonicityAudit) {
    CertifierConfig cfg;
    int audited = 0;
    for (const auto& w : builtin_witnesses("orbit")) {
        auto v = verify_witness(w);
        ASSERT_TRUE(v.verified()) << w.id;
        for (const auto& s : v.samples) {
            Algebra g = instantiate(w.source.entry, s.source_params);
            const Algebra& h = *s.limit;
            auto pg = invariant_profile(g), ph = invariant_profile(h);
            SCOPED_TRACE(w.id);
            EXPECT_GT(pg.orbit_dim, ph.orbit_dim);
            EXPECT_GE(pg.gamma_rank, ph.gamma_rank);
            if (pg.gamma_rank == 0) EXPECT_EQ(ph.gamma_rank, 0);
            EXPECT_GE(pg.derived.first, ph.derived.first);
            EXPECT_GE(pg.derived.second, ph.derived.second);
            for (const auto& [q, d] : pg.derivation_dims) EXPECT_LE(d, ph.derivation_dims.at(q)) << q.str();
            if (pg.traceless) EXPECT_TRUE(ph.traceless);
            for (const auto& [k, r] : pg.ij)
                if (r.exists && ph.ij.at(k).exists) EXPECT_EQ(r.value, ph.ij.at(k).value);
            EXPECT_FALSE(certify_nondegeneration(g, h, 2, cfg));
            ++audited;
        }
    }
    EXPECT_GE(audited, 34);
}
