#include "pmzv/kz.hpp"
#include "pmzv/local_function.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pmzv;

namespace {
Word W(const std::string &s) { return Word::parse(s); }

ZSeries series_of(const LocalFunction &f) {
    REQUIRE(f.table().size() <= 1);
    return f.entry(0, 0);
}
} // namespace

TEST_CASE("li_series low-degree values") {
    ZSeries li1 = series_of(li_series(MzvIndex{1}, 3));
    CHECK(li1.at(1) == 1);
    CHECK(li1.at(2) == Rat(1, 2));
    CHECK(li1.at(3) == Rat(1, 3));

    ZSeries li2 = series_of(li_series(MzvIndex{2}, 3));
    CHECK(li2.at(1) == 1);
    CHECK(li2.at(2) == Rat(1, 4));
    CHECK(li2.at(3) == Rat(1, 9));

    // nested: n2 = 2 gives 1/(1*4); n2 = 3 gives (1/1 + 1/2)/9
    ZSeries li12 = series_of(li_series(MzvIndex{1, 2}, 3));
    CHECK(li12.at(1) == 0);
    CHECK(li12.at(2) == Rat(1, 4));
    CHECK(li12.at(3) == Rat(1, 6));
}

TEST_CASE("integrate_form base cases") {
    int cap = 12;
    // primitive of dz/(z-1) is L1 (log(-1) = 0 p-adically)
    LocalFunction r = integrate_form(LocalFunction::one(), Pole::One, cap);
    CHECK(r == LocalFunction::log_monomial(0, 1, 1));

    // primitive of Li_1 dz/z is Li_2
    LocalFunction li2 = integrate_form(li_series(MzvIndex{1}, cap), Pole::Zero, cap);
    CHECK(agree(li2, li_series(MzvIndex{2}, cap)));

    // primitive of Li_1 dz/(z-1) is -Li_{1,1}; its expansion matches -L1^2/2
    LocalFunction m11 = integrate_form(li_series(MzvIndex{1}, cap), Pole::One, cap);
    CHECK(agree(m11, li_series(MzvIndex{1, 1}, cap).scaled(-1)));
    LocalFunction sym = LocalFunction::log_monomial(0, 2, Rat(-1, 2));
    CHECK(expand_logs(sym, cap).at(2) == m11.entry(0, 0).at(2));
    CHECK(agree(expand_logs(sym, cap), m11.entry(0, 0)));
}

TEST_CASE("integration by parts keeps the symbolic normal form") {
    int cap = 10;
    // int L0 dL1 = Li_2 + L0 L1, the BA coefficient shape
    LocalFunction r = integrate_form(LocalFunction::log_monomial(1, 0, 1), Pole::One, cap);
    LocalFunction expect = li_series(MzvIndex{2}, cap) + LocalFunction::log_monomial(1, 1, 1);
    CHECK(agree(r, expect));
    // int L1^j dL1 = L1^{j+1}/(j+1)
    LocalFunction l12 = integrate_form(LocalFunction::log_monomial(0, 1, 1), Pole::One, cap);
    CHECK(l12 == LocalFunction::log_monomial(0, 2, Rat(1, 2)));
}

TEST_CASE("differentiate follows the two-case rule") {
    int cap = 9;
    // d Li_2 = Li_1 / z
    LocalFunction d2 = differentiate(li_series(MzvIndex{2}, cap));
    ZSeries expect = li_series(MzvIndex{1}, cap).entry(0, 0).divided_by_z();
    CHECK(agree(series_of(d2), expect));

    // d L1 = -1/(1-z) = -(1 + z + z^2 + ...)
    LocalFunction dl1 = differentiate(LocalFunction::log_monomial(0, 1, 1));
    ZSeries geo = ZSeries::constant(1).truncated(cap).divided_by_one_minus_z().scaled(-1);
    CHECK(agree(series_of(dl1.entry(0, 0).is_zero() ? dl1 : dl1), dl1.entry(0, 0)));
    CHECK(agree(dl1.entry(0, 0).truncated(cap), geo));

    // d (L0^i z^n) = n z^{n-1} L0^i + i z^{n-1} L0^{i-1}
    LocalFunction f;
    f.set(2, 0, ZSeries::monomial(1, 3));
    LocalFunction df = differentiate(f);
    CHECK(df.entry(2, 0) == ZSeries::monomial(3, 2));
    CHECK(df.entry(1, 0) == ZSeries::monomial(2, 2));

    // a 1/z pole that the representation cannot express
    CHECK_THROWS(differentiate(LocalFunction::log_monomial(1, 0, 1)));
}

TEST_CASE("fundamental theorem roundtrips") {
    int cap = 14;
    for (auto ix : {MzvIndex{2}, MzvIndex{1, 2}, MzvIndex{3, 1}}) {
        LocalFunction li = li_series(ix, cap);
        LocalFunction back = differentiate(integrate_form(li, Pole::Zero, cap));
        ZSeries quotient = li.entry(0, 0).divided_by_z();
        CHECK(agree(series_of(back), quotient));
    }
}

TEST_CASE("li_series equals the iterated-integral chain") {
    int cap = 20;
    for (auto ix : {MzvIndex{2}, MzvIndex{3}, MzvIndex{1, 2}, MzvIndex{2, 1}, MzvIndex{1, 1},
                    MzvIndex{2, 2}, MzvIndex{1, 1, 2}, MzvIndex{2, 1, 1}, MzvIndex{1, 3, 1}}) {
        LocalFunction chain = LocalFunction::one();
        for (int j = 0; j < ix.depth(); ++j) {
            // innermost index entry first: append a 1, then raise it to k_j
            chain = integrate_form(chain, Pole::One, cap).scaled(-1);
            for (int t = 1; t < ix.ks[j]; ++t)
                chain = integrate_form(chain, Pole::Zero, cap);
        }
        ZSeries expanded;
        bool pure = chain.table().size() == 1 && chain.table().begin()->first == LocalFunction::Key{0, 0};
        if (pure)
            expanded = chain.entry(0, 0);
        else
            expanded = expand_logs(chain, cap);
        CHECK(agree(expanded, li_series(ix, cap).entry(0, 0)));
    }
}
