#pragma once

#include "pmzv/associator.hpp"
#include "pmzv/symbol.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace pmzv {

inline std::vector<MzvIndex> admissible_indices_of_weight(int w) {
    std::vector<MzvIndex> out;
    if (w < 2)
        return out;
    for (const Word &word : Word::all_of_weight(w))
        if (word.in_m())
            out.push_back(word_to_index(word));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void monomials_rec(const std::vector<MzvIndex> &pool, size_t start, int remaining,
                          int mindeg, std::vector<MzvIndex> &cur,
                          std::vector<SymbolMonomial> &out) {
    if (remaining == 0) {
        if (static_cast<int>(cur.size()) >= mindeg) {
            SymbolMonomial m;
            m.factors = cur;
            out.push_back(std::move(m));
        }
        return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
        if (pool[i].weight() > remaining)
            continue;
        cur.push_back(pool[i]);
        monomials_rec(pool, i, remaining - pool[i].weight(), mindeg, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All monomials in admissible symbols of total weight w with at least
/// mindeg factors, factors sorted.
inline std::vector<SymbolMonomial> symbol_monomials_of_weight(int w, int mindeg) {
    std::vector<MzvIndex> pool;
    for (int v = 2; v <= w; ++v)
        for (auto &ix : admissible_indices_of_weight(v))
            pool.push_back(ix);
    std::sort(pool.begin(), pool.end());
    std::vector<SymbolMonomial> out;
    std::vector<MzvIndex> cur;
    detail::monomials_rec(pool, 0, w, mindeg, cur, out);
    return out;
}

/// Shuffle-linearization: the product of the monomial's factors evaluated
/// through the shuffle of their words; linear in the admissible symbols.
inline SymbolPolynomial shuffle_linearization(const SymbolMonomial &m) {
    if (m.is_unit())
        return SymbolPolynomial(Rat(1));
    WordPolynomial acc(index_to_word(m.factors[0]));
    for (size_t i = 1; i < m.factors.size(); ++i)
        acc = shuffle(acc, WordPolynomial(index_to_word(m.factors[i])));
    return zp_linear(acc);
}

/**
 * Weight-homogeneous Q-linear relations among zeta_p symbols in reduced row
 * echelon form.  Pivots are chosen by PivotOrder (highest degree first), so
 * reduction rewrites products of symbols into linear normal forms.
 */
class RelationSet {
  public:
    RelationSet(int weight, bool parity_axiom) : weight_(weight), parity_(parity_axiom) {}

    int weight() const { return weight_; }
    bool parity_axiom() const { return parity_; }
    size_t rank() const { return rows_.size(); }

    void insert(SymbolPolynomial r) {
        if (!r.is_zero() && !r.homogeneous_of_weight(weight_))
            throw std::invalid_argument("relation is not homogeneous of the set's weight");
        r = reduce(r);
        if (r.is_zero())
            return;
        SymbolMonomial pivot = leading_monomial(r);
        r = r.scaled(Rat(1) / r.coefficient(pivot));
        for (auto &[p, row] : rows_) {
            Rat c = row.coefficient(pivot);
            if (c != 0)
                row -= r.scaled(c);
        }
        rows_.emplace(pivot, std::move(r));
    }

    /// Unique normal form of a weight-homogeneous polynomial modulo the span.
    SymbolPolynomial reduce(SymbolPolynomial x) const {
        if (!x.is_zero() && !x.homogeneous_of_weight(weight_))
            throw std::invalid_argument("reduce: grade mismatch");
        while (true) {
            const SymbolMonomial *hit = nullptr;
            Rat c;
            for (auto &[m, coeff] : x.terms()) {
                auto it = rows_.find(m);
                if (it != rows_.end()) {
                    hit = &it->first;
                    c = coeff;
                    break;
                }
            }
            if (!hit)
                return x;
            x -= rows_.at(*hit).scaled(c);
        }
    }

    bool contains(const SymbolPolynomial &x) const { return reduce(x).is_zero(); }

    std::vector<SymbolPolynomial> rows() const {
        std::vector<SymbolPolynomial> out;
        for (auto &[p, r] : rows_)
            out.push_back(r);
        return out;
    }

    bool operator==(const RelationSet &o) const {
        return weight_ == o.weight_ && rows_ == o.rows_;
    }

  private:
    static SymbolMonomial leading_monomial(const SymbolPolynomial &r) {
        PivotOrder less;
        const SymbolMonomial *best = nullptr;
        for (auto &[m, c] : r.terms())
            if (!best || less(m, *best))
                best = &m;
        return *best;
    }

    int weight_;
    bool parity_;
    std::map<SymbolMonomial, SymbolPolynomial, PivotOrder> rows_;
};

/**
 * The shuffle relation set at the given weight: one generator per monomial
 * of degree >= 2, stating that the monomial equals its shuffle
 * linearization.  With the parity axiom, monomials containing a depth-one
 * even symbol are additionally set to zero (an arithmetic input, not a
 * shuffle consequence).
 */
inline RelationSet shuffle_relations(int weight, bool parity_axiom = false) {
    if (weight < 2)
        throw std::invalid_argument("shuffle_relations requires weight >= 2");
    RelationSet rels(weight, parity_axiom);
    for (auto &m : symbol_monomials_of_weight(weight, 2)) {
        SymbolPolynomial row(m, Rat(1));
        row -= shuffle_linearization(m);
        rels.insert(std::move(row));
    }
    if (parity_axiom) {
        for (auto &m : symbol_monomials_of_weight(weight, 1)) {
            bool has_even_depth1 = false;
            for (auto &f : m.factors)
                has_even_depth1 |= (f.depth() == 1 && f.weight() % 2 == 0);
            if (has_even_depth1)
                rels.insert(SymbolPolynomial(m, Rat(1)));
        }
    }
    return rels;
}

/// Lazily built relation sets per weight, shared by the verification suites.
class RelationsCache {
  public:
    explicit RelationsCache(bool parity_axiom = false) : parity_(parity_axiom) {}

    const RelationSet &at(int weight) {
        auto it = sets_.find(weight);
        if (it == sets_.end())
            it = sets_.emplace(weight, shuffle_relations(weight, parity_)).first;
        return it->second;
    }

    /// Split by weight and reduce each homogeneous part.
    SymbolPolynomial reduce_graded(const SymbolPolynomial &x) {
        SymbolPolynomial out;
        for (auto &[w, part] : x.by_weight()) {
            if (w < 2)
                out += part;
            else
                out += at(w).reduce(part);
        }
        return out;
    }

  private:
    bool parity_;
    std::map<int, RelationSet> sets_;
};

} // namespace pmzv
