#pragma once

#include "pmzv/symbol.hpp"
#include "pmzv/word_poly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pmzv {

/// Z_p extended linearly: each word must lie in M (admissible index).
inline SymbolPolynomial zp_linear(const WordPolynomial &x) {
    SymbolPolynomial r;
    for (auto &[w, c] : x.terms()) {
        if (w.is_empty()) {
            r += SymbolPolynomial(c);
            continue;
        }
        if (!w.in_m())
            throw std::invalid_argument("Z_p is only defined on words in M: " + w.str());
        r += SymbolPolynomial::zeta(word_to_index(w), c);
    }
    return r;
}

/**
 * Coefficient I_p(W) of the associator expansion, as a linear combination of
 * admissible symbols of weight wt(W).  For W = B^r V A^s (V in M or empty):
 *   I_p(W) = (-1)^{dp(W)} sum_{a<=r, b<=s} (-1)^{a+b}
 *            Z_p( f(B^a o B^{r-a} V A^{s-b} o A^b) ).
 */
inline SymbolPolynomial phi_coefficient(const Word &w) {
    if (w.is_empty())
        return SymbolPolynomial(Rat(1));
    int dp = w.depth();
    Rat outer = dp % 2 ? -1 : 1;
    if (w.in_m())
        return SymbolPolynomial::zeta(word_to_index(w), outer);
    int r = w.leading_b_count();
    Word rest = w.suffix_from(r);
    int s = rest.trailing_a_count();
    Word mid = rest.prefix(rest.size() - s);
    SymbolPolynomial acc;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= s; ++b) {
            Word inner_word = Word::run_b(r - a).concat(mid).concat(Word::run_a(s - b));
            WordPolynomial sh =
                shuffle(shuffle(Word::run_b(a), inner_word), WordPolynomial(Word::run_a(b)));
            SymbolPolynomial z = zp_linear(proj_f(sh));
            acc += (a + b) % 2 ? z.scaled(-1) : z;
        }
    return acc.scaled(outer);
}

/// 1 + sum_{wt(W) <= bound} I_p(W) W.
inline WordSeries<SymbolPolynomial> phi_expansion(int weight_bound) {
    if (weight_bound < 1)
        throw std::invalid_argument("weight bound must be >= 1");
    WordSeries<SymbolPolynomial> phi;
    phi.cap = weight_bound;
    phi.add(Word::empty(), SymbolPolynomial(Rat(1)));
    for (int w = 1; w <= weight_bound; ++w)
        for (const Word &word : Word::all_of_weight(w))
            phi.add(word, phi_coefficient(word));
    return phi;
}

/**
 * Regularized p-adic MZV for a non-admissible index (k_1, ..., k_{m-1}, 1):
 * the value (-1)^m I_p(W) with W = B A^{k_{m-1}-1} B ... A^{k_1-1} B.
 * The identity is conditional on convergence of the defining limit.
 */
inline SymbolPolynomial regularized_mzv(const MzvIndex &ix) {
    if (ix.admissible())
        throw std::invalid_argument("regularized_mzv expects k_m = 1");
    Word w = index_to_word(ix);
    SymbolPolynomial i = phi_coefficient(w);
    return ix.depth() % 2 ? i.scaled(-1) : i;
}

/// Symbol for any index: admissible indices directly, others through the
/// regularized rewrite.
inline SymbolPolynomial symbol_for_index(const MzvIndex &ix) {
    if (ix.admissible())
        return SymbolPolynomial::zeta(ix);
    return regularized_mzv(ix);
}

/**
 * Asymptotic expansion of J(w)(1 - eps) as eps -> 0 under the restricted
 * limit: a polynomial in lambda = log^a(eps), returned as the vector of
 * lambda-power coefficients.  Splitting w = B^j w'' contributes
 * lambda^j / j! * I_p(w'').
 */
inline std::vector<SymbolPolynomial> asymptotic_at_one(const Word &w) {
    std::vector<SymbolPolynomial> coeffs(static_cast<size_t>(w.size()) + 1);
    for (int j = 0; j <= w.leading_b_count(); ++j) {
        SymbolPolynomial i = phi_coefficient(w.suffix_from(j));
        coeffs[j] = i.scaled(Rat(1) / Rat(factorial(j)));
    }
    return coeffs;
}

/// Same for Li_w (w ending in B): Li_w = (-1)^{dp} J(w).
inline std::vector<SymbolPolynomial> li_asymptotic_at_one(const Word &w) {
    auto v = asymptotic_at_one(w);
    if (w.depth() % 2)
        for (auto &c : v)
            c = c.scaled(-1);
    return v;
}

} // namespace pmzv
