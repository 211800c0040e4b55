#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmzv {

/**
 * Word in the letters A, B, packed as bits (A = 0, B = 1) with the first
 * letter in the lowest bit.  The length-0 word stands for the unit 1 of the
 * word algebra.  Canonical order: by weight, then lexicographic with A < B.
 */
class Word {
  public:
    Word() = default;
    Word(std::uint64_t bits, int len) : bits_(bits), len_(len) { check(len); }

    static Word empty() { return Word(); }
    static Word letter_a() { return Word(0, 1); }
    static Word letter_b() { return Word(1, 1); }
    static Word run_a(int n) { return Word(0, n); }
    static Word run_b(int n) {
        check(n);
        return Word(n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n)), n);
    }

    static Word parse(const std::string &s) {
        Word w;
        for (char c : s) {
            if (c == 'A')
                w = w.append(0);
            else if (c == 'B')
                w = w.append(1);
            else
                throw std::invalid_argument("word letters must be A or B");
        }
        return w;
    }

    int size() const { return len_; }
    int weight() const { return len_; }
    bool is_empty() const { return len_ == 0; }
    int letter(int i) const { return static_cast<int>((bits_ >> i) & 1); }
    int depth() const {
        int d = 0;
        for (int i = 0; i < len_; ++i)
            d += letter(i);
        return d;
    }

    Word append(int letter) const {
        check(len_ + 1);
        return Word(bits_ | (std::uint64_t(letter & 1) << len_), len_ + 1);
    }
    Word prepend(int letter) const {
        check(len_ + 1);
        return Word((bits_ << 1) | std::uint64_t(letter & 1), len_ + 1);
    }
    Word concat(const Word &o) const {
        check(len_ + o.len_);
        return Word(bits_ | (o.bits_ << len_), len_ + o.len_);
    }
    Word prefix(int n) const {
        return Word(n == 0 ? 0 : bits_ & (~std::uint64_t(0) >> (64 - n)), n);
    }
    Word suffix_from(int i) const { return Word(bits_ >> i, len_ - i); }
    Word drop_first() const { return suffix_from(1); }
    Word drop_last() const { return prefix(len_ - 1); }

    // letterwise swap A <-> B
    Word tau() const {
        if (len_ == 0)
            return *this;
        return Word(~bits_ & (~std::uint64_t(0) >> (64 - len_)), len_);
    }

    bool starts_with_a() const { return len_ > 0 && letter(0) == 0; }
    bool starts_with_b() const { return len_ > 0 && letter(0) == 1; }
    bool ends_with_a() const { return len_ > 0 && letter(len_ - 1) == 0; }
    bool ends_with_b() const { return len_ > 0 && letter(len_ - 1) == 1; }
    bool in_m_prime() const { return ends_with_b(); }              // A°·B
    bool in_m() const { return starts_with_a() && ends_with_b(); } // A·A°·B

    int trailing_a_count() const {
        int r = 0;
        while (r < len_ && letter(len_ - 1 - r) == 0)
            ++r;
        return r;
    }
    int leading_b_count() const {
        int r = 0;
        while (r < len_ && letter(r) == 1)
            ++r;
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < len_; ++i)
            s += letter(i) ? 'B' : 'A';
        return s;
    }

    bool operator==(const Word &o) const { return len_ == o.len_ && bits_ == o.bits_; }
    bool operator!=(const Word &o) const { return !(*this == o); }
    bool operator<(const Word &o) const {
        if (len_ != o.len_)
            return len_ < o.len_;
        for (int i = 0; i < len_; ++i)
            if (letter(i) != o.letter(i))
                return letter(i) < o.letter(i);
        return false;
    }

    // all words of the given weight, in canonical order
    static std::vector<Word> all_of_weight(int w) {
        std::vector<Word> out;
        if (w == 0)
            return {empty()};
        out.reserve(std::size_t(1) << w);
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << w); ++m) {
            // canonical order reads letters from the front; enumerate accordingly
            std::uint64_t bits = 0;
            for (int i = 0; i < w; ++i)
                bits |= ((m >> (w - 1 - i)) & 1) << i;
            out.emplace_back(bits, w);
        }
        return out;
    }

  private:
    static void check(int len) {
        if (len < 0 || len > 62)
            throw std::length_error("word length out of range");
    }
    std::uint64_t bits_ = 0;
    int len_ = 0;
};

/**
 * Index (k_1, ..., k_m) of a multiple zeta value / polylogarithm.
 * Admissible means k_m > 1.  Indices correspond to words ending in B via
 * W = A^{k_m - 1} B A^{k_{m-1} - 1} B ... A^{k_1 - 1} B.
 */
struct MzvIndex {
    std::vector<int> ks;

    MzvIndex() = default;
    explicit MzvIndex(std::vector<int> k) : ks(std::move(k)) {
        if (ks.empty())
            throw std::invalid_argument("index must have depth >= 1");
        for (int k : ks)
            if (k < 1)
                throw std::invalid_argument("index entries must be >= 1");
    }
    MzvIndex(std::initializer_list<int> k) : MzvIndex(std::vector<int>(k)) {}

    int depth() const { return static_cast<int>(ks.size()); }
    int weight() const {
        int w = 0;
        for (int k : ks)
            w += k;
        return w;
    }
    bool admissible() const { return ks.back() > 1; }
    bool all_ones() const {
        for (int k : ks)
            if (k != 1)
                return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < ks.size(); ++i)
            s += (i ? "," : "") + std::to_string(ks[i]);
        return s;
    }

    static MzvIndex parse(const std::string &s) {
        std::vector<int> ks;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (tok.empty())
                throw std::invalid_argument("bad index: " + s);
            ks.push_back(std::stoi(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return MzvIndex(ks);
    }

    bool operator==(const MzvIndex &o) const { return ks == o.ks; }
    // depth, then lexicographic on the entries
    bool operator<(const MzvIndex &o) const {
        if (ks.size() != o.ks.size())
            return ks.size() < o.ks.size();
        return ks < o.ks;
    }
};

inline Word index_to_word(const MzvIndex &ix) {
    Word w;
    for (int i = ix.depth() - 1; i >= 0; --i)
        w = w.concat(Word::run_a(ix.ks[i] - 1)).append(1);
    return w;
}

inline MzvIndex word_to_index(const Word &w) {
    if (!w.in_m_prime())
        throw std::invalid_argument("word_to_index requires a word ending in B");
    std::vector<int> runs; // A-run length before each B, left to right
    int run = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (w.letter(i) == 0) {
            ++run;
        } else {
            runs.push_back(run);
            run = 0;
        }
    }
    std::vector<int> ks(runs.size());
    for (size_t i = 0; i < runs.size(); ++i)
        ks[runs.size() - 1 - i] = runs[i] + 1;
    return MzvIndex(ks);
}

} // namespace pmzv
