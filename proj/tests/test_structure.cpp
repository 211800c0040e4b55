#include "pmzv/structure.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pmzv;

TEST_CASE("group-like check passes through weight 5") {
    RelationsCache rels;
    VerifyReport rep = grouplike_check(5, rels);
    for (auto &w : rep.witnesses)
        INFO(w.what << ": " << w.detail);
    CHECK(rep.passed());
}

TEST_CASE("a single group-like instance needs a genuine relation") {
    // I(BA) I(BA) = zeta(2)^2 while I(BA o BA) is linear; only the shuffle
    // relation set identifies them
    RelationsCache rels;
    SymbolPolynomial lhs = phi_coefficient(Word::parse("BA")) * phi_coefficient(Word::parse("BA"));
    SymbolPolynomial rhs;
    for (auto &[w, c] : shuffle(Word::parse("BA"), Word::parse("BA")))
        rhs += phi_coefficient(w).scaled(c);
    CHECK(!(lhs - rhs).is_zero());
    CHECK(rels.reduce_graded(lhs - rhs).is_zero());
}

TEST_CASE("abelianization check passes through weight 5") {
    RelationsCache rels;
    VerifyReport rep = abelianization_check(5, rels);
    for (auto &w : rep.witnesses)
        INFO(w.what << ": " << w.detail);
    CHECK(rep.passed());
    // the (2,1) bidegree is the printed cancellation -z3 + 2 z3 - z3 = 0
    SymbolPolynomial s = phi_coefficient(Word::parse("AAB")) +
                         phi_coefficient(Word::parse("ABA")) +
                         phi_coefficient(Word::parse("BAA"));
    CHECK(s.is_zero());
}

TEST_CASE("log phi has the expected low-weight coordinates") {
    WordSeries<SymbolPolynomial> lp = log_phi(4);
    CHECK(lp.coefficient(Word::parse("A")).is_zero());
    CHECK(lp.coefficient(Word::parse("B")).is_zero());
    CHECK(lp.coefficient(Word::parse("AB")) == SymbolPolynomial::zeta(MzvIndex{2}, -1));
    CHECK(lp.coefficient(Word::parse("AA")).is_zero());
}

TEST_CASE("lie check passes through weight 5") {
    RelationsCache rels;
    VerifyReport rep = lie_check(5, rels);
    for (auto &w : rep.witnesses)
        INFO(w.what << ": " << w.detail);
    CHECK(rep.passed());
}
