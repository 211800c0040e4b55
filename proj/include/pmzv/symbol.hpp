#pragma once

#include "pmzv/rational.hpp"
#include "pmzv/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace pmzv {

/**
 * Monomial in formal zeta_p symbols: a multiset of admissible indices,
 * kept sorted.  The empty monomial is the unit.
 */
struct SymbolMonomial {
    std::vector<MzvIndex> factors; // sorted by the index order

    SymbolMonomial() = default;
    explicit SymbolMonomial(MzvIndex ix) : factors{std::move(ix)} {}

    int degree() const { return static_cast<int>(factors.size()); }
    int weight() const {
        int w = 0;
        for (auto &f : factors)
            w += f.weight();
        return w;
    }
    bool is_unit() const { return factors.empty(); }

    SymbolMonomial times(const SymbolMonomial &o) const {
        SymbolMonomial r = *this;
        r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
        std::sort(r.factors.begin(), r.factors.end());
        return r;
    }

    bool operator==(const SymbolMonomial &o) const { return factors == o.factors; }
    // degree, then lexicographic by factor order
    bool operator<(const SymbolMonomial &o) const {
        if (factors.size() != o.factors.size())
            return factors.size() < o.factors.size();
        return factors < o.factors;
    }

    std::string str() const {
        if (factors.empty())
            return "1";
        std::string s;
        for (auto &f : factors) {
            if (!s.empty())
                s += "*";
            s += "z(" + f.str() + ")";
        }
        return s;
    }
    std::string latex() const {
        if (factors.empty())
            return "1";
        std::string s;
        for (auto &f : factors) {
            if (!s.empty())
                s += " ";
            s += "\\zeta_p(" + f.str() + ")";
        }
        return s;
    }
};

/// Pivot priority for echelon bookkeeping: higher degree first, then the
/// plain monomial order; products rewrite into lower-degree normal forms.
struct PivotOrder {
    bool operator()(const SymbolMonomial &a, const SymbolMonomial &b) const {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a < b;
    }
};

/**
 * Polynomial with exact rational coefficients in zeta_p symbols, graded by
 * total weight.  Zero coefficients are pruned.
 */
class SymbolPolynomial {
  public:
    SymbolPolynomial() = default;
    explicit SymbolPolynomial(const Rat &c) { add(SymbolMonomial(), c); }
    SymbolPolynomial(const SymbolMonomial &m, const Rat &c) { add(m, c); }

    static SymbolPolynomial zeta(const MzvIndex &ix, const Rat &c = 1) {
        return SymbolPolynomial(SymbolMonomial(ix), c);
    }

    void add(const SymbolMonomial &m, const Rat &c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SymbolPolynomial &operator+=(const SymbolPolynomial &o) {
        for (auto &[m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    SymbolPolynomial &operator-=(const SymbolPolynomial &o) {
        for (auto &[m, c] : o.terms_)
            add(m, -c);
        return *this;
    }
    friend SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial &b) {
        return a += b;
    }
    friend SymbolPolynomial operator-(SymbolPolynomial a, const SymbolPolynomial &b) {
        return a -= b;
    }
    friend SymbolPolynomial operator*(const SymbolPolynomial &a, const SymbolPolynomial &b) {
        SymbolPolynomial r;
        for (auto &[ma, ca] : a.terms_)
            for (auto &[mb, cb] : b.terms_)
                r.add(ma.times(mb), ca * cb);
        return r;
    }

    SymbolPolynomial scaled(const Rat &c) const {
        SymbolPolynomial r;
        if (c == 0)
            return r;
        for (auto &[m, k] : terms_)
            r.terms_.emplace(m, k * c);
        return r;
    }

    Rat coefficient(const SymbolMonomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SymbolPolynomial &o) const { return terms_ == o.terms_; }
    const std::map<SymbolMonomial, Rat> &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool homogeneous_of_weight(int w) const {
        for (auto &[m, c] : terms_)
            if (m.weight() != w)
                return false;
        return true;
    }

    // split into weight-homogeneous parts
    std::map<int, SymbolPolynomial> by_weight() const {
        std::map<int, SymbolPolynomial> out;
        for (auto &[m, c] : terms_)
            out[m.weight()].add(m, c);
        return out;
    }

    std::string str() const { return render([](const SymbolMonomial &m) { return m.str(); }, "*"); }
    std::string latex() const {
        return render([](const SymbolMonomial &m) { return m.latex(); }, " ");
    }

  private:
    template <class F> std::string render(F mono, const std::string &sep) const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto &[m, c] : terms_) {
            Rat a = c < 0 ? Rat(-c) : c;
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string ms = mono(m);
            if (m.is_unit())
                s += to_string(a);
            else if (a == 1)
                s += ms;
            else
                s += to_string(a) + sep + ms;
        }
        return s;
    }

    std::map<SymbolMonomial, Rat> terms_;
};

} // namespace pmzv
