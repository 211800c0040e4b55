#pragma once

#include "pmzv/associator.hpp"
#include "pmzv/relations.hpp"
#include "pmzv/structure.hpp"
#include "pmzv/word_poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace pmzv {

/// Rational function with poles only at 0 and 1: num(z) / (z^a (1-z)^b),
/// kept in lowest terms with respect to z and (1-z).
struct RatFunc {
    std::vector<Rat> num;
    int a = 0, b = 0;

    RatFunc() = default;
    explicit RatFunc(const Rat &c) {
        if (c != 0)
            num = {c};
    }
    RatFunc(std::vector<Rat> n, int za, int zb) : num(std::move(n)), a(za), b(zb) { normalize(); }

    static RatFunc one_over_z() { return RatFunc({Rat(1)}, 1, 0); }
    static RatFunc one_over_one_minus_z() { return RatFunc({Rat(1)}, 0, 1); }

    bool is_zero() const { return num.empty(); }

    void normalize() {
        while (!num.empty() && num.back() == 0)
            num.pop_back();
        if (num.empty()) {
            a = b = 0;
            return;
        }
        while (a > 0 && num[0] == 0) {
            num.erase(num.begin());
            --a;
        }
        while (b > 0 && eval_poly(num, Rat(1)) == 0) {
            num = divide_by_one_minus_z(num);
            --b;
        }
    }

    friend RatFunc operator+(const RatFunc &x, const RatFunc &y) {
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        int a = std::max(x.a, y.a), b = std::max(x.b, y.b);
        std::vector<Rat> nx = scale_up(x.num, a - x.a, b - x.b);
        std::vector<Rat> ny = scale_up(y.num, a - y.a, b - y.b);
        if (ny.size() > nx.size())
            nx.resize(ny.size(), Rat(0));
        for (size_t k = 0; k < ny.size(); ++k)
            nx[k] += ny[k];
        return RatFunc(std::move(nx), a, b);
    }
    friend RatFunc operator-(const RatFunc &x, const RatFunc &y) { return x + y.scaled(-1); }
    friend RatFunc operator*(const RatFunc &x, const RatFunc &y) {
        if (x.is_zero() || y.is_zero())
            return RatFunc();
        return RatFunc(mul_poly(x.num, y.num), x.a + y.a, x.b + y.b);
    }

    RatFunc scaled(const Rat &c) const {
        RatFunc r = *this;
        if (c == 0)
            return RatFunc();
        for (auto &x : r.num)
            x *= c;
        return r;
    }

    RatFunc derivative() const {
        if (is_zero())
            return RatFunc();
        // (P / z^a (1-z)^b)' = (P' z (1-z) - a P (1-z) + b P z) / z^{a+1} (1-z)^{b+1}
        std::vector<Rat> dp(num.size() > 1 ? num.size() - 1 : 0, Rat(0));
        for (size_t k = 1; k < num.size(); ++k)
            dp[k - 1] = num[k] * Rat(static_cast<int>(k));
        std::vector<Rat> t1 = mul_poly(shift_z(dp, 1), {Rat(1), Rat(-1)});
        std::vector<Rat> t2 = mul_poly(num, {Rat(-a), Rat(a)});
        std::vector<Rat> t3 = shift_z(num, 1);
        for (auto &x : t3)
            x *= b;
        std::vector<Rat> sum = add_poly(add_poly(t1, t2), t3);
        return RatFunc(std::move(sum), a + 1, b + 1);
    }

    bool is_constant() const { return a == 0 && b == 0 && num.size() <= 1; }
    Rat constant_value() const {
        if (!is_constant())
            throw std::domain_error("rational function is not constant");
        return num.empty() ? Rat(0) : num[0];
    }

    bool operator==(const RatFunc &o) const { return num == o.num && a == o.a && b == o.b; }

  private:
    static Rat eval_poly(const std::vector<Rat> &p, const Rat &x) {
        Rat acc = 0;
        for (size_t k = p.size(); k-- > 0;)
            acc = acc * x + p[k];
        return acc;
    }
    static std::vector<Rat> divide_by_one_minus_z(const std::vector<Rat> &p) {
        // q with (1 - z) q = p, valid when p(1) = 0
        std::vector<Rat> q(p.size() > 1 ? p.size() - 1 : 0, Rat(0));
        Rat carry = 0;
        for (size_t k = 0; k < q.size(); ++k) {
            q[k] = p[k] + carry;
            carry = q[k];
        }
        return q;
    }
    static std::vector<Rat> shift_z(const std::vector<Rat> &p, int k) {
        if (p.empty())
            return p;
        std::vector<Rat> r(p.size() + k, Rat(0));
        for (size_t i = 0; i < p.size(); ++i)
            r[i + k] = p[i];
        return r;
    }
    static std::vector<Rat> mul_poly(const std::vector<Rat> &x, const std::vector<Rat> &y) {
        if (x.empty() || y.empty())
            return {};
        std::vector<Rat> r(x.size() + y.size() - 1, Rat(0));
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j)
                r[i + j] += x[i] * y[j];
        return r;
    }
    static std::vector<Rat> add_poly(std::vector<Rat> x, const std::vector<Rat> &y) {
        if (y.size() > x.size())
            x.resize(y.size(), Rat(0));
        for (size_t k = 0; k < y.size(); ++k)
            x[k] += y[k];
        return x;
    }
    static std::vector<Rat> scale_up(const std::vector<Rat> &p, int dz, int d1mz) {
        std::vector<Rat> r = shift_z(p, dz);
        for (int k = 0; k < d1mz; ++k)
            r = mul_poly(r, {Rat(1), Rat(-1)});
        return r;
    }
};

enum class Arg { Z, OneMinusZ };

/// Multiple polylogarithm generator Li_ix evaluated at z or 1-z.  All-ones
/// indices never appear here: they are normalized into log powers.
struct LiGen {
    Arg arg;
    MzvIndex ix;
    auto key() const { return std::make_tuple(arg == Arg::Z ? 0 : 1, ix); }
    bool operator==(const LiGen &o) const { return arg == o.arg && ix == o.ix; }
    bool operator<(const LiGen &o) const { return key() < o.key(); }
    std::string str() const {
        return "Li(" + ix.str() + ")(" + (arg == Arg::Z ? "z" : "1-z") + ")";
    }
};

/// L0^l0 L1^l1 and at most one Li generator.
struct FnMonomial {
    int l0 = 0, l1 = 0;
    std::optional<LiGen> li;

    auto key() const {
        return std::make_tuple(l0, l1, li.has_value(),
                               li ? li->key() : std::make_tuple(0, MzvIndex{1}));
    }
    bool operator==(const FnMonomial &o) const { return l0 == o.l0 && l1 == o.l1 && li == o.li; }
    bool operator<(const FnMonomial &o) const { return key() < o.key(); }

    FnMonomial merged(const FnMonomial &o) const {
        if (li && o.li)
            throw std::logic_error("product of two Li generators is not representable");
        FnMonomial r;
        r.l0 = l0 + o.l0;
        r.l1 = l1 + o.l1;
        r.li = li ? li : o.li;
        return r;
    }

    std::string str() const {
        std::string s;
        if (li)
            s += li->str();
        if (l0)
            s += (s.empty() ? "" : "*") + std::string("L0^") + std::to_string(l0);
        if (l1)
            s += (s.empty() ? "" : "*") + std::string("L1^") + std::to_string(l1);
        return s.empty() ? "1" : s;
    }
};

/**
 * Formal linear combination, over zeta_p-symbol coefficients, of Li/log
 * monomials with rational-function coefficients.  Closed under d/dz with
 * distinct generators treated as algebraically independent.
 */
class FnExpr {
  public:
    using Key = std::pair<FnMonomial, SymbolMonomial>;

    FnExpr() = default;

    void add(const FnMonomial &mono, const SymbolMonomial &sym, const RatFunc &c) {
        if (c.is_zero())
            return;
        Key k{mono, sym};
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    FnExpr &operator+=(const FnExpr &o) {
        for (auto &[k, c] : o.terms_)
            add(k.first, k.second, c);
        return *this;
    }
    FnExpr &operator-=(const FnExpr &o) {
        for (auto &[k, c] : o.terms_)
            add(k.first, k.second, c.scaled(-1));
        return *this;
    }
    friend FnExpr operator+(FnExpr a, const FnExpr &b) { return a += b; }
    friend FnExpr operator-(FnExpr a, const FnExpr &b) { return a -= b; }

    FnExpr scaled(const Rat &c) const {
        FnExpr r;
        for (auto &[k, rc] : terms_)
            r.add(k.first, k.second, rc.scaled(c));
        return r;
    }

    // multiply every term by mono (merging) and c
    FnExpr times_monomial(const FnMonomial &mono, const RatFunc &c) const {
        FnExpr r;
        for (auto &[k, rc] : terms_)
            r.add(k.first.merged(mono), k.second, rc * c);
        return r;
    }

    FnExpr times_symbols(const SymbolPolynomial &s) const {
        FnExpr r;
        for (auto &[k, rc] : terms_)
            for (auto &[m, c] : s.terms())
                r.add(k.first, k.second.times(m), rc.scaled(c));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, RatFunc> &terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto &[k, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += "[" + k.first.str() + " ; " + k.second.str() + "]";
        }
        return s;
    }

  private:
    std::map<Key, RatFunc> terms_;
};

namespace fn_detail {

inline FnMonomial log_power(Arg arg, int t) {
    FnMonomial m;
    (arg == Arg::Z ? m.l0 : m.l1) = t;
    return m;
}

// Li_w(arg) for w ending in B, with B^m collapsed to (-log(1-arg))^m / m!
inline FnExpr li_fn(const Word &w, Arg arg) {
    FnExpr e;
    int m = w.size();
    if (w == Word::run_b(m)) {
        FnMonomial mono = log_power(arg == Arg::Z ? Arg::OneMinusZ : Arg::Z, m);
        e.add(mono, SymbolMonomial(),
              RatFunc(Rat(m % 2 ? -1 : 1) / Rat(factorial(m))));
        return e;
    }
    FnMonomial mono;
    mono.li = LiGen{arg, word_to_index(w)};
    e.add(mono, SymbolMonomial(), RatFunc(Rat(1)));
    return e;
}

inline FnExpr li_fn(const WordPolynomial &x, Arg arg) {
    FnExpr e;
    for (auto &[w, c] : x.terms()) {
        if (w.is_empty()) {
            e.add(FnMonomial{}, SymbolMonomial(), RatFunc(c));
            continue;
        }
        e += li_fn(w, arg).scaled(c);
    }
    return e;
}

} // namespace fn_detail

/// J(w) as a formal expression in the argument (z or 1-z), via the closed
/// formulas for the fundamental solution.
inline FnExpr j_fn(const Word &w, Arg arg) {
    using namespace fn_detail;
    if (w.is_empty()) {
        FnExpr e;
        e.add(FnMonomial{}, SymbolMonomial(), RatFunc(Rat(1)));
        return e;
    }
    int r = w.trailing_a_count();
    Word v = w.prefix(w.size() - r);
    FnExpr acc;
    if (v.is_empty()) {
        acc.add(log_power(arg, r), SymbolMonomial(),
                RatFunc(Rat(1) / Rat(factorial(r))));
        return acc;
    }
    int dp = w.depth();
    for (int s = 0; s <= r; ++s) {
        int t = r - s;
        WordPolynomial proj = proj_f_prime(shuffle(v, Word::run_a(s)));
        Rat scale = Rat((dp + s) % 2 ? -1 : 1) / Rat(factorial(t));
        acc += li_fn(proj, arg).times_monomial(log_power(arg, t), RatFunc(scale));
    }
    return acc;
}

/// d/dz of a single Li generator, via the two-case differentiation rule and
/// the chain rule for the 1-z substitution.
inline FnExpr d_li(const LiGen &g) {
    MzvIndex red = g.ix;
    bool last_gt_one = red.ks.back() > 1;
    if (last_gt_one)
        --red.ks.back();
    else
        red.ks.pop_back();
    FnExpr f = fn_detail::li_fn(index_to_word(red), g.arg);
    RatFunc factor;
    if (g.arg == Arg::Z)
        factor = last_gt_one ? RatFunc::one_over_z() : RatFunc::one_over_one_minus_z();
    else
        factor = (last_gt_one ? RatFunc::one_over_one_minus_z() : RatFunc::one_over_z())
                     .scaled(-1);
    return f.times_monomial(FnMonomial{}, factor);
}

inline FnExpr derivative(const FnExpr &e) {
    FnExpr out;
    for (auto &[k, rf] : e.terms()) {
        const FnMonomial &m = k.first;
        const SymbolMonomial &sym = k.second;
        out.add(m, sym, rf.derivative());
        if (m.l0 >= 1) {
            FnMonomial m2 = m;
            --m2.l0;
            out.add(m2, sym, rf.scaled(m.l0) * RatFunc::one_over_z());
        }
        if (m.l1 >= 1) {
            FnMonomial m2 = m;
            --m2.l1;
            out.add(m2, sym, rf.scaled(-m.l1) * RatFunc::one_over_one_minus_z());
        }
        if (m.li) {
            FnMonomial m2 = m;
            m2.li.reset();
            FnExpr d = d_li(*m.li).times_monomial(m2, rf);
            for (auto &[k2, rf2] : d.terms())
                out.add(k2.first, k2.second.times(sym), rf2);
        }
    }
    return out;
}

/**
 * Regularized limit z -> 1 of an expression with constant coefficients, as a
 * polynomial in lambda = log^a(1-z):
 *   Li(1-z) -> 0,  terms with a log(z) factor -> 0,  L1 -> lambda,
 *   Li(z) -> its asymptotic lambda-polynomial.
 */
inline std::vector<SymbolPolynomial> limit_at_one(const FnExpr &e) {
    std::vector<SymbolPolynomial> lam(1);
    auto bump = [&lam](size_t n) {
        if (lam.size() < n + 1)
            lam.resize(n + 1);
    };
    for (auto &[k, rf] : e.terms()) {
        const FnMonomial &m = k.first;
        Rat c = rf.constant_value(); // throws if a z-dependent coefficient survived
        if (m.l0 >= 1)
            continue; // positive-order factor kills log powers in the restricted limit
        if (m.li && m.li->arg == Arg::OneMinusZ)
            continue; // vanishes at 0 against any log power
        if (m.li) {
            auto asym = li_asymptotic_at_one(index_to_word(m.li->ix));
            for (size_t j = 0; j < asym.size(); ++j) {
                if (asym[j].is_zero())
                    continue;
                bump(m.l1 + j);
                lam[m.l1 + j] += (asym[j] * SymbolPolynomial(k.second, Rat(1))).scaled(c);
            }
        } else {
            bump(m.l1);
            lam[m.l1] += SymbolPolynomial(k.second, c);
        }
    }
    return lam;
}

struct FunctionalEquationReport {
    Word word;
    bool derivative_ok = false;
    bool limit_ok = false;
    std::string detail;
    bool passed() const { return derivative_ok && limit_ok; }
};

/**
 * Verify J(w)(1-z) = sum_{w = w' w''} J(tau(w'))(z) I_p(w'') by checking
 * that the difference has identically zero derivative in the free function
 * algebra and zero regularized limit at z -> 1 modulo shuffle relations.
 */
inline FunctionalEquationReport verify_functional_equation(const Word &w, RelationsCache &rels) {
    FunctionalEquationReport rep;
    rep.word = w;
    FnExpr lhs = j_fn(w, Arg::OneMinusZ);
    FnExpr rhs;
    for (int cut = 0; cut <= w.size(); ++cut) {
        Word head = w.prefix(cut), tail = w.suffix_from(cut);
        SymbolPolynomial ip = phi_coefficient(tail);
        if (ip.is_zero())
            continue;
        rhs += j_fn(head.tau(), Arg::Z).times_symbols(ip);
    }
    FnExpr diff = lhs - rhs;
    FnExpr d = derivative(diff);
    rep.derivative_ok = d.is_zero();
    if (!rep.derivative_ok)
        rep.detail = "derivative residual: " + d.str();
    auto lam = limit_at_one(diff);
    rep.limit_ok = true;
    for (size_t j = 0; j < lam.size(); ++j) {
        SymbolPolynomial red = rels.reduce_graded(lam[j]);
        if (!red.is_zero()) {
            rep.limit_ok = false;
            rep.detail += " limit residual at lambda^" + std::to_string(j) + ": " + red.str();
        }
    }
    return rep;
}

/// Suite wrapper over all words of weight <= bound.
inline VerifyReport functional_equation_check(int weight_bound, RelationsCache &rels) {
    VerifyReport rep{"functional-equations", weight_bound, {}};
    for (int v = 1; v <= weight_bound; ++v)
        for (const Word &word : Word::all_of_weight(v)) {
            auto r = verify_functional_equation(word, rels);
            if (!r.passed())
                rep.witnesses.push_back({word.str(), r.detail});
        }
    return rep;
}

} // namespace pmzv
