#include "pmzv/fn_expr.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pmzv;

namespace {
Word W(const std::string &s) { return Word::parse(s); }
SymbolPolynomial Z(std::initializer_list<int> ks, const Rat &c = 1) {
    return SymbolPolynomial::zeta(MzvIndex(ks), c);
}
} // namespace

TEST_CASE("rational functions with poles at 0 and 1") {
    RatFunc z = RatFunc({Rat(0), Rat(1)}, 0, 0);
    RatFunc invz = RatFunc::one_over_z();
    CHECK(z * invz == RatFunc(Rat(1)));
    RatFunc f = RatFunc(Rat(1)) - RatFunc({Rat(0), Rat(1)}, 0, 0); // 1 - z
    CHECK(f * RatFunc::one_over_one_minus_z() == RatFunc(Rat(1)));
    // derivative of 1/z is -1/z^2
    CHECK(invz.derivative() == RatFunc({Rat(-1)}, 2, 0));
    // derivative of 1/(1-z) is 1/(1-z)^2
    CHECK(RatFunc::one_over_one_minus_z().derivative() == RatFunc({Rat(1)}, 0, 2));
    CHECK((f + RatFunc({Rat(0), Rat(1)}, 0, 0)) == RatFunc(Rat(1)));
    CHECK(RatFunc(Rat(2)).is_constant());
    CHECK_THROWS(invz.constant_value());
}

TEST_CASE("derivation rules on generators") {
    // d Li_2(z) = Li_1(z)/z = -L1/z
    FnMonomial li2;
    li2.li = LiGen{Arg::Z, MzvIndex{2}};
    FnExpr e;
    e.add(li2, SymbolMonomial(), RatFunc(Rat(1)));
    FnExpr d = derivative(e);
    FnMonomial l1;
    l1.l1 = 1;
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms().begin()->first.first == l1);
    CHECK(d.terms().begin()->second == RatFunc::one_over_z().scaled(-1));

    // d [ Li_2(1-z) ] = -Li_1(1-z)/(1-z) = +L0/(1-z)
    FnMonomial li2m;
    li2m.li = LiGen{Arg::OneMinusZ, MzvIndex{2}};
    FnExpr e2;
    e2.add(li2m, SymbolMonomial(), RatFunc(Rat(1)));
    FnExpr d2 = derivative(e2);
    FnMonomial l0;
    l0.l0 = 1;
    REQUIRE(d2.terms().size() == 1);
    CHECK(d2.terms().begin()->first.first == l0);
    CHECK(d2.terms().begin()->second == RatFunc::one_over_one_minus_z());
}

TEST_CASE("j_fn reproduces the closed coefficients") {
    // J(BA)(z) = Li_2(z) + L0 L1
    FnExpr jba = j_fn(W("BA"), Arg::Z);
    FnMonomial li2;
    li2.li = LiGen{Arg::Z, MzvIndex{2}};
    FnMonomial l0l1;
    l0l1.l0 = l0l1.l1 = 1;
    CHECK(jba.terms().size() == 2);
    CHECK(jba.terms().count({li2, SymbolMonomial()}) == 1);
    CHECK(jba.terms().count({l0l1, SymbolMonomial()}) == 1);
}

TEST_CASE("functional equation for the dilogarithm word") {
    RelationsCache rels;
    auto rep = verify_functional_equation(W("AB"), rels);
    CHECK(rep.derivative_ok);
    CHECK(rep.limit_ok);
}

TEST_CASE("printed functional equations hold as formal identities") {
    RelationsCache rels;
    // Li_{2,1}(1-z) = 2Li_3(z) - log z Li_2(z) - z2 log z - 2 z3:
    // encode the right side minus J(BAB)(1-z)/sign and let the checker decide
    for (auto name : {"BAB", "BAAB"}) {
        auto rep = verify_functional_equation(W(name), rels);
        INFO(name << " " << rep.detail);
        CHECK(rep.passed());
    }
}

TEST_CASE("limit substitution picks out the constant term") {
    // J(AB)(1-z) -> I_p(AB) as z -> 1... built as lhs, its limit must match
    // the lambda^0 value of the right side
    FnExpr lhs = j_fn(W("AB"), Arg::OneMinusZ);
    auto lam = limit_at_one(lhs);
    CHECK(lam[0].is_zero()); // Li_2(1-z) term vanishes in the limit
    FnExpr rhs;
    rhs += j_fn(W("BA"), Arg::Z); // tau(AB) = BA, paired with I_p(1) = 1
    auto lam2 = limit_at_one(rhs);
    REQUIRE(!lam2.empty());
    CHECK(lam2[0] == Z({2})); // Li_2(z) -> zeta_p(2), log z log(1-z) -> 0
}

TEST_CASE("all words of weight <= 3 satisfy the functional equation") {
    RelationsCache rels;
    VerifyReport rep = functional_equation_check(3, rels);
    for (auto &w : rep.witnesses)
        INFO(w.what << ": " << w.detail);
    CHECK(rep.passed());
}
