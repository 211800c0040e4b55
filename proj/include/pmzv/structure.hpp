#pragma once

#include "pmzv/associator.hpp"
#include "pmzv/relations.hpp"
#include "pmzv/word_poly.hpp"

#include <string>
#include <vector>

namespace pmzv {

struct Witness {
    std::string what;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    int weight_bound = 0;
    std::vector<Witness> witnesses;
    bool passed() const { return witnesses.empty(); }
};

/**
 * Group-likeness of the associator, checked coefficientwise: for every pair
 * of nonempty words U, V with wt(U) + wt(V) <= bound,
 * I_p(U) I_p(V) - I_p(U o V) must reduce to zero modulo shuffle relations.
 */
inline VerifyReport grouplike_check(int weight_bound, RelationsCache &rels) {
    VerifyReport rep{"grouplike", weight_bound, {}};
    WordSeries<SymbolPolynomial> phi = phi_expansion(weight_bound);
    for (int wu = 1; wu < weight_bound; ++wu)
        for (int wv = 1; wu + wv <= weight_bound; ++wv)
            for (const Word &u : Word::all_of_weight(wu))
                for (const Word &v : Word::all_of_weight(wv)) {
                    SymbolPolynomial lhs = phi.coefficient(u) * phi.coefficient(v);
                    SymbolPolynomial rhs;
                    for (auto &[w, c] : shuffle(u, v))
                        rhs += phi.coefficient(w).scaled(c);
                    SymbolPolynomial d = rels.reduce_graded(lhs - rhs);
                    if (!d.is_zero())
                        rep.witnesses.push_back({u.str() + " , " + v.str(), d.str()});
                }
    return rep;
}

/**
 * The abelianized associator is 1: for every bidegree (r, s) with
 * r + s >= 1, the sum of I_p(W) over words with r A's and s B's reduces to
 * zero.
 */
inline VerifyReport abelianization_check(int weight_bound, RelationsCache &rels) {
    VerifyReport rep{"abelianization", weight_bound, {}};
    for (int w = 1; w <= weight_bound; ++w) {
        std::vector<SymbolPolynomial> by_depth(static_cast<size_t>(w) + 1);
        for (const Word &word : Word::all_of_weight(w))
            by_depth[word.depth()] += phi_coefficient(word);
        for (int s = 0; s <= w; ++s) {
            SymbolPolynomial d = rels.reduce_graded(by_depth[s]);
            if (!d.is_zero())
                rep.witnesses.push_back(
                    {"bidegree (" + std::to_string(w - s) + "," + std::to_string(s) + ")",
                     d.str()});
        }
    }
    return rep;
}

/// log of the associator, truncated at the weight bound (exact by grading).
inline WordSeries<SymbolPolynomial> log_phi(int weight_bound) {
    WordSeries<SymbolPolynomial> phi = phi_expansion(weight_bound);
    WordSeries<SymbolPolynomial> x = phi;
    x.add(Word::empty(), SymbolPolynomial(Rat(-1))); // x = phi - 1
    WordSeries<SymbolPolynomial> acc;
    acc.cap = weight_bound;
    WordSeries<SymbolPolynomial> power = x;
    for (int n = 1; n <= weight_bound; ++n) {
        Rat c = Rat(n % 2 ? 1 : -1, n);
        for (auto &[w, coeff] : power.terms)
            acc.add(w, coeff.scaled(c));
        if (n < weight_bound)
            power = power * x;
    }
    return acc;
}

/**
 * The Lie property: log Phi has no linear part, is primitive modulo shuffle
 * relations (pairings against proper shuffles vanish), and its coordinates
 * along A^r and B^s vanish, which is the visible part of membership in the
 * derived Lie algebra.
 */
inline VerifyReport lie_check(int weight_bound, RelationsCache &rels) {
    VerifyReport rep{"lie", weight_bound, {}};
    WordSeries<SymbolPolynomial> lphi = log_phi(weight_bound);
    if (!lphi.coefficient(Word::letter_a()).is_zero() ||
        !lphi.coefficient(Word::letter_b()).is_zero())
        rep.witnesses.push_back({"linear part", "nonzero coefficient on A or B"});
    for (int wu = 1; wu < weight_bound; ++wu)
        for (int wv = 1; wu + wv <= weight_bound; ++wv)
            for (const Word &u : Word::all_of_weight(wu))
                for (const Word &v : Word::all_of_weight(wv)) {
                    SymbolPolynomial pairing;
                    for (auto &[w, c] : shuffle(u, v))
                        pairing += lphi.coefficient(w).scaled(c);
                    SymbolPolynomial d = rels.reduce_graded(pairing);
                    if (!d.is_zero())
                        rep.witnesses.push_back(
                            {"<log phi, " + u.str() + " o " + v.str() + ">", d.str()});
                }
    for (int r = 1; r <= weight_bound; ++r) {
        SymbolPolynomial da = rels.reduce_graded(lphi.coefficient(Word::run_a(r)));
        SymbolPolynomial db = rels.reduce_graded(lphi.coefficient(Word::run_b(r)));
        if (!da.is_zero())
            rep.witnesses.push_back({"<log phi, A^" + std::to_string(r) + ">", da.str()});
        if (!db.is_zero())
            rep.witnesses.push_back({"<log phi, B^" + std::to_string(r) + ">", db.str()});
    }
    return rep;
}

} // namespace pmzv
