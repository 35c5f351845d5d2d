#include <gtest/gtest.h>

#include "lsdeg/errors.hpp"
#include "lsdeg/expr.hpp"
#include "lsdeg/ratfun.hpp"

using namespace lsdeg;
using G = GaussianRational;

TEST(Gaussian, FieldOps) {
    G a(Rational(1, 2), Rational(3, 4)), b(-2, 3);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * a.inverse(), G(1));
    EXPECT_EQ(G::i() * G::i(), G(-1));
    EXPECT_EQ(a - a, G(0));
    EXPECT_THROW(G(0).inverse(), DivisionByZero);
}

TEST(Gaussian, StrRoundTrip) {
    for (const char* s : {"3", "-1/2", "i", "-2i", "1/2+3/4i", "-7/5-1/3i", "0"})
        EXPECT_EQ(parse_gaussian(s).str(), s);
}

TEST(Gaussian, Pow) {
    EXPECT_EQ(G(-1, 2).pow(3), G(-1, 8));
    EXPECT_EQ(G::i().pow(4), G(1));
    EXPECT_EQ(G(5).pow(0), G(1));
}

TEST(RatFun, LimitsAndValuation) {
    RatFun t = RatFun::var();
    RatFun r = (t * t + t) / t;  // t + 1
    EXPECT_EQ(r.limit_at_zero(), G(1));
    EXPECT_EQ(*((t * t) / (t + RatFun(1))).valuation_at_zero(), 2);
    EXPECT_EQ(*(RatFun(1) / t).valuation_at_zero(), -1);
    EXPECT_FALSE(RatFun(0).valuation_at_zero());
    EXPECT_THROW((RatFun(1) / t).limit_at_zero(), PoleAtZero);
    EXPECT_EQ(((t + RatFun(2)) / (t - RatFun(1))).evaluate_at(G(3)), G(5, 2));
}

TEST(RatFun, CanonicalForm) {
    RatFun t = RatFun::var();
    RatFun a = (t * t - RatFun(1)) / (t - RatFun(1));
    EXPECT_EQ(a, t + RatFun(1));
    EXPECT_EQ(RatFun(G(2)) / RatFun(G(4)), RatFun(G(1, 2)));
}

TEST(Expr, ParseScalar) {
    ExprEnv env;
    env.symbols["a"] = RatFun(G(3));
    EXPECT_EQ(parse_scalar("1/a + 2i", env).constant_value(), G(Rational(1, 3), Rational(2)));
    EXPECT_EQ(parse_scalar("-(a+1)^2", env).constant_value(), G(-16));
    RatFun t = RatFun::var();
    EXPECT_EQ(parse_scalar("t^2/(1-t)", env), t * t / (RatFun(1) - t));
}

TEST(Expr, SqrtMode) {
    ExprEnv env;
    env.sqrt_mode = true;
    RatFun s = RatFun::var();
    EXPECT_EQ(parse_scalar("t*sqrt(t)", env), s * s * s);
}

TEST(Expr, ParseErrorPosition) {
    ExprEnv env;
    try {
        parse_scalar("1 + * 2", env, 4, 10);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 4);
        EXPECT_GE(e.column, 10);
    }
    EXPECT_THROW(parse_scalar("q + 1", env), ParseError);
}

TEST(Expr, LinComb) {
    ExprEnv env;
    env.basis = {"e1", "e2", "f1", "f2"};
    auto lc = parse_lincomb("t e1 - 1/2 f2 + e1", env);
    EXPECT_EQ(lc.at("e1"), RatFun::var() + RatFun(1));
    EXPECT_EQ(lc.at("f2"), RatFun(G(-1, 2)));
}
