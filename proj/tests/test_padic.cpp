#include "pmzv/padic.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace pmzv;

TEST_CASE("additive inverse cancels to precision") {
    Padic one = Padic::from_integer(5, 1, 5);
    Padic sum = one + (-one);
    CHECK(sum.is_zero());
    CHECK(sum.precision() == 5);
}

TEST_CASE("p times 1/p is 1") {
    for (long long p : {3LL, 7LL, 11LL}) {
        Padic x = Padic::from_integer(p, p, 12);
        Padic prod = x * x.inverse();
        CHECK(agree(prod, Padic::from_integer(p, 1, prod.precision())));
        CHECK(!prod.is_zero());
        CHECK(prod.valuation() == 0);
    }
}

TEST_CASE("1/3 in Q_7 verified by multiplication") {
    Padic third = Padic::from_rational(7, Rat(1, 3), 10);
    Padic back = third * Padic::from_integer(7, 3, 10);
    CHECK(agree(back, Padic::from_integer(7, 1, 10)));
    auto d = third.digits();
    REQUIRE(d.size() >= 3);
    CHECK(d[0] == 5);
    CHECK(d[1] == 4);
    CHECK(d[2] == 4); // 3*(5 + 4*7 + 4*49) = 1 mod 7^3
}

TEST_CASE("division by zero-to-precision and prime mismatch are errors") {
    CHECK_THROWS(Padic::zero(5, 8).inverse());
    CHECK_THROWS(Padic::from_integer(5, 1, 8) + Padic::from_integer(7, 1, 8));
    CHECK_THROWS(Padic::from_integer(2, 1, 8));
    CHECK_THROWS(Padic::from_integer(9, 1, 8));
}

TEST_CASE("precision propagation rules") {
    Padic a = Padic::from_integer(5, 7, 10);
    Padic b = Padic::from_integer(5, 25, 6);
    CHECK((a + b).precision() == 6);
    CHECK((a * b).precision() == std::min(0 + 6, 2 + 10));
    // division: relative precision is the min of the operands'
    Padic q = a / b;
    CHECK(q.precision() - q.valuation() == 4);
}

TEST_CASE("teichmuller fixed points and roots of unity") {
    CHECK(agree(teichmuller(Padic::from_integer(7, 1, 10)), Padic::from_integer(7, 1, 10)));
    for (long long p : {3LL, 5LL, 7LL, 13LL}) {
        Padic t = teichmuller(Padic::from_integer(p, p - 1, 12));
        CHECK(agree(t, Padic::from_integer(p, -1, 12)));
    }
    Padic t2 = teichmuller(Padic::from_integer(7, 2, 14));
    CHECK(t2.digits()[0] == 2);
    CHECK(agree(t2.pow(6), Padic::from_integer(7, 1, 14)));
    CHECK_THROWS(teichmuller(Padic::from_integer(7, 7, 10)));
}

TEST_CASE("log of p picks out the branch parameter") {
    for (long long p : {3LL, 7LL}) {
        BranchParameter branch{Padic::from_rational(p, Rat(2, 3), 20)};
        Padic lp = log_branch(Padic::from_integer(p, p, 20), branch);
        CHECK(agree(lp, branch.a));
    }
}

TEST_CASE("log kills Teichmuller representatives") {
    BranchParameter branch{Padic::from_integer(7, 4, 16)};
    Padic zeta = teichmuller(Padic::from_integer(7, 3, 16));
    CHECK(log_branch(zeta, branch).is_zero());
}

TEST_CASE("log(1+p) against partial-sum oracle at two truncation levels") {
    long long p = 7;
    int prec = 12;
    Padic val = log_branch(Padic::from_integer(p, 1 + p, prec), BranchParameter::iwasawa(p));
    for (int terms : {14, 20}) {
        Rat sum = 0, power = 1;
        for (int n = 1; n <= terms; ++n) {
            power *= Rat(p);
            sum += (n % 2 ? power : -power) / n;
        }
        Padic oracle = Padic::from_rational(p, sum, prec);
        CHECK(agree(val, oracle));
    }
}

TEST_CASE("exp basics and inversion of log") {
    long long p = 5;
    CHECK(agree(exp_p(Padic::zero(p, 10)), Padic::from_integer(p, 1, 10)));
    Padic u = Padic::from_integer(p, 1 + p, 12);
    CHECK(agree(exp_p(log_branch(u, BranchParameter::iwasawa(p))), u));
    CHECK_THROWS(exp_p(Padic::from_integer(p, 2, 10)));
}

TEST_CASE("exp(5) in Q_5 against partial sums at two depths") {
    long long p = 5;
    int prec = 10;
    Padic val = exp_p(Padic::from_integer(p, p, prec));
    for (int terms : {16, 24}) {
        Rat sum = 1, term = 1;
        for (int n = 1; n <= terms; ++n) {
            term *= Rat(p) / n;
            sum += term;
        }
        CHECK(agree(val, Padic::from_rational(p, sum, prec)));
    }
}

TEST_CASE("log/exp invert each other on random principal units") {
    std::mt19937_64 rng(20240131);
    for (long long p : {3LL, 5LL, 11LL}) {
        for (int trial = 0; trial < 10; ++trial) {
            int prec = 14;
            Int u = 1 + p * Int(rng() % 1000003);
            Padic x = Padic::from_integer(p, u, prec);
            BranchParameter branch{Padic::from_integer(p, static_cast<long long>(rng() % 50), 20)};
            Padic lg = log_branch(x, branch);
            CHECK(agree(exp_p(lg), x));
            Padic y = Padic::from_integer(p, p * (1 + Int(rng() % 997)), prec);
            CHECK(agree(log_branch(exp_p(y), branch), y));
        }
    }
}

TEST_CASE("branch dependence is linear in the valuation") {
    std::mt19937_64 rng(7);
    long long p = 5;
    for (int trial = 0; trial < 12; ++trial) {
        int v = static_cast<int>(rng() % 5) - 2;
        Int unit = 1 + Int(rng() % 100000);
        if (unit % p == 0)
            ++unit;
        Padic z = Padic::from_rational(p, Rat(unit) * rat_pow(Rat(p), v), 16);
        BranchParameter a{Padic::from_integer(p, 3, 18)};
        BranchParameter b{Padic::from_integer(p, static_cast<long long>(11 + 5 * (rng() % 7)), 18)};
        Padic diff = log_branch(z, a) - log_branch(z, b);
        Padic expect = (a.a - b.a).mul_rational(Rat(v));
        CHECK(agree(diff, expect));
    }
}

namespace {

// random arithmetic expression evaluated at a chosen precision
Padic fuzz_expr(std::mt19937_64 &rng, long long p, int prec, int depth, std::uint64_t seed) {
    std::mt19937_64 local(seed);
    auto make_leaf = [&](int pr) {
        Int n = Int(local() % 2000000) - 1000000;
        if (n == 0)
            n = 1;
        return Padic::from_integer(p, n, pr);
    };
    Padic acc = make_leaf(prec);
    for (int d = 0; d < depth; ++d) {
        Padic rhs = make_leaf(prec);
        switch (local() % 4) {
        case 0: acc = acc + rhs; break;
        case 1: acc = acc - rhs; break;
        case 2: acc = acc * rhs; break;
        default:
            if (!rhs.is_zero())
                acc = acc / rhs;
            break;
        }
    }
    (void)rng;
    return acc;
}

} // namespace

TEST_CASE("precision soundness under fuzzing: recompute higher, truncate, agree") {
    std::mt19937_64 rng(99);
    for (long long p : {3LL, 7LL}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::uint64_t seed = rng();
            Padic lo = fuzz_expr(rng, p, 12, 6, seed);
            Padic hi = fuzz_expr(rng, p, 22, 6, seed);
            REQUIRE(hi.precision() >= lo.precision());
            CHECK(hi.truncate_to(lo.precision()) == lo);
        }
    }
}

TEST_CASE("serialization digits round the rendered value") {
    Padic x = Padic::from_rational(7, Rat(30, 1), 4); // 2 + 4*7 = 30
    auto d = x.digits();
    REQUIRE(d.size() == 4);
    CHECK(d[0] == 2);
    CHECK(d[1] == 4);
    CHECK(x.str() == "2 + 4*7 + O(7^4)");
    CHECK(Padic::zero(5, 3).str() == "0 + O(5^3)");
}
