#pragma once

#include "pmzv/rational.hpp"
#include "pmzv/word.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pmzv {

/**
 * Finite Q-linear combination of words (the empty word is the unit 1).
 * Zero coefficients are never stored, so iteration order is canonical.
 */
class WordPolynomial {
  public:
    WordPolynomial() = default;
    explicit WordPolynomial(const Word &w, const Rat &c = 1) { add(w, c); }

    static WordPolynomial one() { return WordPolynomial(Word::empty()); }

    void add(const Word &w, const Rat &c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    WordPolynomial &operator+=(const WordPolynomial &o) {
        for (auto &[w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    WordPolynomial &operator-=(const WordPolynomial &o) {
        for (auto &[w, c] : o.terms_)
            add(w, -c);
        return *this;
    }
    friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial &b) { return a += b; }
    friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial &b) { return a -= b; }

    WordPolynomial scaled(const Rat &c) const {
        WordPolynomial r;
        if (c == 0)
            return r;
        for (auto &[w, k] : terms_)
            r.terms_.emplace(w, k * c);
        return r;
    }

    Rat coefficient(const Word &w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat unit_coefficient() const { return coefficient(Word::empty()); }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const WordPolynomial &o) const { return terms_ == o.terms_; }

    const std::map<Word, Rat> &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // bilinear inner product with <W, W'> = delta_{W,W'} on words
    friend Rat inner(const WordPolynomial &x, const WordPolynomial &y) {
        Rat r = 0;
        const auto &small = x.terms_.size() <= y.terms_.size() ? x : y;
        const auto &big = x.terms_.size() <= y.terms_.size() ? y : x;
        for (auto &[w, c] : small.terms_)
            r += c * big.coefficient(w);
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto &[w, c] : terms_) {
            std::string cs = to_string(c < 0 ? Rat(-c) : c);
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string ws = w.is_empty() ? "1" : w.str();
            if (cs == "1" && !w.is_empty())
                s += ws;
            else
                s += cs + (w.is_empty() ? "" : "*" + ws);
        }
        return s;
    }

  private:
    std::map<Word, Rat> terms_;
};

/// Shuffle of two plain words by dynamic programming over suffix pairs.
inline WordPolynomial shuffle(const Word &u, const Word &v) {
    int n = u.size(), m = v.size();
    std::vector<std::vector<WordPolynomial>> dp(n + 1, std::vector<WordPolynomial>(m + 1));
    dp[n][m] = WordPolynomial::one();
    for (int i = n; i >= 0; --i)
        for (int j = m; j >= 0; --j) {
            if (i == n && j == m)
                continue;
            WordPolynomial acc;
            if (i < n)
                for (auto &[w, c] : dp[i + 1][j].terms())
                    acc.add(w.prepend(u.letter(i)), c);
            if (j < m)
                for (auto &[w, c] : dp[i][j + 1].terms())
                    acc.add(w.prepend(v.letter(j)), c);
            dp[i][j] = std::move(acc);
        }
    return dp[0][0];
}

inline WordPolynomial shuffle(const WordPolynomial &u, const WordPolynomial &v) {
    WordPolynomial r;
    for (auto &[wu, cu] : u.terms())
        for (auto &[wv, cv] : v.terms())
            r += shuffle(wu, wv).scaled(cu * cv);
    return r;
}

/// f': kills words ending in A; identity on 1 and on words ending in B.
inline WordPolynomial proj_f_prime(const WordPolynomial &x) {
    WordPolynomial r;
    for (auto &[w, c] : x.terms())
        if (!w.ends_with_a())
            r.add(w, c);
    return r;
}

/// f: kills words starting with B or ending with A; identity on 1 and on M.
inline WordPolynomial proj_f(const WordPolynomial &x) {
    WordPolynomial r;
    for (auto &[w, c] : x.terms())
        if (!w.ends_with_a() && !w.starts_with_b())
            r.add(w, c);
    return r;
}

inline WordPolynomial tau(const WordPolynomial &x) {
    WordPolynomial r;
    for (auto &[w, c] : x.terms())
        r.add(w.tau(), c);
    return r;
}

/// F'(W) = (-1)^r f'(W' o A^r) for W = W'A^r with W' in M' or W' = 1.
inline WordPolynomial map_F_prime(const Word &w) {
    int r = w.trailing_a_count();
    Word head = w.prefix(w.size() - r);
    WordPolynomial sh = shuffle(head, Word::run_a(r));
    return proj_f_prime(r % 2 ? sh.scaled(-1) : sh);
}

/// F(W) = sum_{a<=r, b<=s} (-1)^{a+b} f'(B^a o B^{r-a} W' A^{s-b} o A^b)
/// for W = B^r W' A^s with W' in M or W' = 1.  The image is asserted to lie
/// in M + Q*1: the non-M words produced by individual summands cancel.
inline WordPolynomial map_F(const Word &w) {
    int r = w.leading_b_count();
    Word rest = w.suffix_from(r);
    int s = rest.trailing_a_count();
    Word mid = rest.prefix(rest.size() - s);
    WordPolynomial total;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= s; ++b) {
            Word inner_word = Word::run_b(r - a).concat(mid).concat(Word::run_a(s - b));
            WordPolynomial sh = shuffle(shuffle(Word::run_b(a), inner_word),
                                        WordPolynomial(Word::run_a(b)));
            total += proj_f_prime((a + b) % 2 ? sh.scaled(-1) : sh);
        }
    for (auto &[word, c] : total.terms())
        if (!word.is_empty() && !word.in_m())
            throw std::logic_error("map_F image escaped M + Q*1 at word " + word.str());
    return total;
}

/// Transpose of F': sum over subsets S of the A-positions of w of
/// (-1)^{|S|} (w with S deleted) A^{|S|}.
inline WordPolynomial g_transpose_prime(const Word &w) {
    std::vector<int> apos;
    for (int i = 0; i < w.size(); ++i)
        if (w.letter(i) == 0)
            apos.push_back(i);
    WordPolynomial r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << apos.size()); ++mask) {
        int cnt = 0;
        Word kept;
        std::uint64_t del = 0;
        for (size_t k = 0; k < apos.size(); ++k)
            if ((mask >> k) & 1) {
                del |= std::uint64_t(1) << apos[k];
                ++cnt;
            }
        for (int i = 0; i < w.size(); ++i)
            if (!((del >> i) & 1))
                kept = kept.append(w.letter(i));
        r.add(kept.concat(Word::run_a(cnt)), cnt % 2 ? -1 : 1);
    }
    return r;
}

/// Transpose of F: delete subsets of A-positions (appending A's) and of
/// B-positions (prepending B's), with sign (-1)^{|S_A| + |S_B|}.
inline WordPolynomial g_transpose(const Word &w) {
    std::vector<int> apos, bpos;
    for (int i = 0; i < w.size(); ++i)
        (w.letter(i) == 0 ? apos : bpos).push_back(i);
    WordPolynomial r;
    for (std::uint64_t ma = 0; ma < (std::uint64_t(1) << apos.size()); ++ma)
        for (std::uint64_t mb = 0; mb < (std::uint64_t(1) << bpos.size()); ++mb) {
            std::uint64_t del = 0;
            int ca = 0, cb = 0;
            for (size_t k = 0; k < apos.size(); ++k)
                if ((ma >> k) & 1) {
                    del |= std::uint64_t(1) << apos[k];
                    ++ca;
                }
            for (size_t k = 0; k < bpos.size(); ++k)
                if ((mb >> k) & 1) {
                    del |= std::uint64_t(1) << bpos[k];
                    ++cb;
                }
            Word kept;
            for (int i = 0; i < w.size(); ++i)
                if (!((del >> i) & 1))
                    kept = kept.append(w.letter(i));
            Word term = Word::run_b(cb).concat(kept).concat(Word::run_a(ca));
            r.add(term, (ca + cb) % 2 ? -1 : 1);
        }
    return r;
}

/// Coproduct with A and B primitive: Delta(w) = sum over position subsets S
/// of (letters at S) tensor (letters off S), extended as an algebra map.
inline std::map<std::pair<Word, Word>, Rat> coproduct(const WordPolynomial &x) {
    std::map<std::pair<Word, Word>, Rat> out;
    auto add = [&out](const Word &l, const Word &r, const Rat &c) {
        auto key = std::make_pair(l, r);
        auto [it, inserted] = out.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        }
    };
    for (auto &[w, c] : x.terms()) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << w.size()); ++mask) {
            Word left, right;
            for (int i = 0; i < w.size(); ++i)
                ((mask >> i) & 1 ? left : right) = ((mask >> i) & 1 ? left : right).append(w.letter(i));
            add(left, right, c);
        }
    }
    return out;
}

/**
 * Truncated series in the completed word algebra, with coefficients in C.
 * The empty word carries the constant term.  Multiplication concatenates
 * words and drops everything above the weight cap.
 */
template <class C> struct WordSeries {
    int cap = 0;
    std::map<Word, C> terms;

    static WordSeries constant(int cap, const C &c) {
        WordSeries s;
        s.cap = cap;
        if (!(c == C{}))
            s.terms.emplace(Word::empty(), c);
        return s;
    }

    C coefficient(const Word &w) const {
        auto it = terms.find(w);
        return it == terms.end() ? C{} : it->second;
    }

    void add(const Word &w, const C &c) {
        if (w.weight() > cap)
            return;
        auto [it, inserted] = terms.try_emplace(w, c);
        if (!inserted)
            it->second = it->second + c;
        if (it->second == C{})
            terms.erase(w);
    }

    friend WordSeries operator+(const WordSeries &a, const WordSeries &b) {
        WordSeries r = a;
        r.cap = std::min(a.cap, b.cap);
        for (auto &[w, c] : b.terms)
            r.add(w, c);
        return r;
    }

    friend WordSeries operator*(const WordSeries &a, const WordSeries &b) {
        WordSeries r;
        r.cap = std::min(a.cap, b.cap);
        for (auto &[wa, ca] : a.terms) {
            if (wa.weight() > r.cap)
                continue;
            for (auto &[wb, cb] : b.terms) {
                if (wa.weight() + wb.weight() > r.cap)
                    continue;
                r.add(wa.concat(wb), ca * cb);
            }
        }
        return r;
    }
};

} // namespace pmzv
