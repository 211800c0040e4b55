#pragma once

#include "pmzv/word.hpp"
#include "pmzv/zseries.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace pmzv {

/**
 * Polynomial in the symbols L0 = log^a(z) and L1 = log^a(1-z) with truncated
 * rational power series in z as coefficients.  The branch parameter never
 * enters: every coefficient is an exact rational, which is what makes branch
 * independence checkable at the representation level.
 *
 * Entries are indexed by (i, j) = (L0-exponent, L1-exponent); zero series
 * are never stored.
 */
class LocalFunction {
  public:
    using Key = std::pair<int, int>;

    LocalFunction() = default;
    explicit LocalFunction(const Rat &c) { set(0, 0, ZSeries::constant(c)); }

    static LocalFunction one() { return LocalFunction(Rat(1)); }
    static LocalFunction series(ZSeries s) {
        LocalFunction f;
        f.set(0, 0, std::move(s));
        return f;
    }
    // c * L0^i * L1^j
    static LocalFunction log_monomial(int i, int j, const Rat &c) {
        LocalFunction f;
        f.set(i, j, ZSeries::constant(c));
        return f;
    }

    void set(int i, int j, ZSeries s) {
        if (s.is_zero() && s.trunc >= ZSeries::kExact)
            return;
        if (s.is_zero()) {
            // a vanished truncated series still bounds the trusted degree
            auto it = table_.find({i, j});
            if (it == table_.end())
                table_.emplace(Key{i, j}, std::move(s));
            else
                it->second = it->second.truncated(s.trunc);
            return;
        }
        table_[Key{i, j}] = std::move(s);
    }

    void accumulate(int i, int j, const ZSeries &s) {
        auto it = table_.find({i, j});
        if (it == table_.end())
            set(i, j, s);
        else {
            it->second = it->second + s;
            if (it->second.is_zero() && it->second.trunc >= ZSeries::kExact)
                table_.erase(it);
        }
    }

    const std::map<Key, ZSeries> &table() const { return table_; }
    bool is_zero() const {
        for (auto &[k, s] : table_)
            if (!s.is_zero())
                return false;
        return true;
    }

    ZSeries entry(int i, int j) const {
        auto it = table_.find({i, j});
        return it == table_.end() ? ZSeries() : it->second;
    }

    LocalFunction operator+(const LocalFunction &o) const {
        LocalFunction r = *this;
        for (auto &[k, s] : o.table_)
            r.accumulate(k.first, k.second, s);
        return r;
    }
    LocalFunction operator-(const LocalFunction &o) const { return *this + o.scaled(-1); }

    LocalFunction scaled(const Rat &c) const {
        LocalFunction r;
        if (c == 0)
            return r;
        for (auto &[k, s] : table_)
            r.table_.emplace(k, s.scaled(c));
        return r;
    }

    // multiply by c * L0^di * L1^dj
    LocalFunction log_shifted(int di, int dj, const Rat &c) const {
        LocalFunction r;
        if (c == 0)
            return r;
        for (auto &[k, s] : table_)
            r.table_.emplace(Key{k.first + di, k.second + dj}, s.scaled(c));
        return r;
    }

    LocalFunction operator*(const LocalFunction &o) const {
        LocalFunction r;
        for (auto &[ka, sa] : table_)
            for (auto &[kb, sb] : o.table_)
                r.accumulate(ka.first + kb.first, ka.second + kb.second, sa * sb);
        return r;
    }

    int max_log_degree() const {
        int d = 0;
        for (auto &[k, s] : table_)
            d = std::max(d, k.first + k.second);
        return d;
    }

    bool operator==(const LocalFunction &o) const { return table_ == o.table_; }

    friend bool agree(const LocalFunction &a, const LocalFunction &b) {
        for (auto &[k, s] : a.table_)
            if (!agree(s, b.entry(k.first, k.second)))
                return false;
        for (auto &[k, s] : b.table_)
            if (a.table_.find(k) == a.table_.end() && !agree(s, ZSeries()))
                return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (auto &[k, ser] : table_) {
            if (ser.is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            s += "[" + ser.str() + "]";
            if (k.first)
                s += "*L0^" + std::to_string(k.first);
            if (k.second)
                s += "*L1^" + std::to_string(k.second);
        }
        return s.empty() ? "0" : s;
    }

  private:
    std::map<Key, ZSeries> table_;
};

/// -log(1-z) = z + z^2/2 + ... as a truncated series.
inline ZSeries minus_log_one_minus_z(int zdeg) {
    std::vector<Rat> c(zdeg + 1, Rat(0));
    for (int n = 1; n <= zdeg; ++n)
        c[n] = Rat(1, n);
    return ZSeries(std::move(c), zdeg);
}

/// L1^j expanded as a power series, trusted to zdeg.
inline ZSeries lambda1_power_series(int j, int zdeg) {
    ZSeries r = ZSeries::constant(1).truncated(zdeg);
    ZSeries base = minus_log_one_minus_z(zdeg).scaled(-1);
    for (int k = 0; k < j; ++k)
        r = r * base;
    return r;
}

/// Replace the L1 symbol by its series; fails if L0 is present.
inline ZSeries expand_logs(const LocalFunction &f, int zdeg) {
    ZSeries acc = ZSeries().truncated(zdeg);
    for (auto &[k, s] : f.table()) {
        if (k.first != 0)
            throw std::domain_error("cannot expand log(z) into a power series at 0");
        acc = acc + s * lambda1_power_series(k.second, zdeg);
    }
    return acc;
}

/**
 * Truncated p-adic MPL expansion on |z|_p < 1:
 * sum over 0 < n_1 < ... < n_m <= zdeg of z^{n_m} / (n_1^{k_1} ... n_m^{k_m}),
 * as a pure power series.
 */
inline LocalFunction li_series(const MzvIndex &ix, int zdeg) {
    if (zdeg < 1)
        throw std::invalid_argument("li_series requires zdeg >= 1");
    std::vector<Rat> layer(zdeg + 1, Rat(0)); // layer[n] = nested sum with top index n
    for (int n = 1; n <= zdeg; ++n)
        layer[n] = Rat(1) / rat_pow(Rat(n), ix.ks[0]);
    for (int j = 1; j < ix.depth(); ++j) {
        std::vector<Rat> next(zdeg + 1, Rat(0));
        Rat prefix = 0;
        for (int n = 1; n <= zdeg; ++n) {
            prefix += layer[n - 1];
            next[n] = prefix / rat_pow(Rat(n), ix.ks[j]);
        }
        layer = std::move(next);
    }
    return LocalFunction::series(ZSeries(std::move(layer), zdeg));
}

enum class Pole { Zero, One };

/**
 * Formal derivative d/dz.  Throws when a 1/z pole would be required, i.e.
 * a L0^i (i >= 1) coefficient with nonzero constant term.
 */
inline LocalFunction differentiate(const LocalFunction &f) {
    LocalFunction r;
    for (auto &[k, s] : f.table()) {
        auto [i, j] = k;
        r.accumulate(i, j, s.derivative());
        if (i >= 1)
            r.accumulate(i - 1, j, s.divided_by_z().scaled(i)); // throws if s(0) != 0
        if (j >= 1)
            r.accumulate(i, j - 1, s.divided_by_one_minus_z().scaled(-j));
    }
    return r;
}

/// z(1-z) * d/dz f, which never needs a pole; used for residue checks.
inline LocalFunction derivative_mul_z_one_minus_z(const LocalFunction &f) {
    LocalFunction r;
    for (auto &[k, s] : f.table()) {
        auto [i, j] = k;
        r.accumulate(i, j, s.derivative().shifted_up().times_one_minus_z());
        if (i >= 1)
            r.accumulate(i - 1, j, s.times_one_minus_z().scaled(i));
        if (j >= 1)
            r.accumulate(i, j - 1, s.shifted_up().scaled(-j));
    }
    return r;
}

/**
 * Primitive of f dz/z (pole = Zero) or f dz/(z-1) (pole = One), normalized so
 * the analytic part vanishes at z = 0.  Reduction rules, applied
 * deterministically per (i, j)-monomial:
 *   - L1 powers against dz/z are expanded into series (the L1 degree is
 *     reduced before anything touches L0);
 *   - L0 powers are lowered by integration by parts;
 *   - a constant c against dz/z contributes c*L0, against dz/(z-1) it
 *     contributes c*L1;
 *   - pure series integrate termwise.
 */
inline LocalFunction integrate_form(const LocalFunction &f, Pole pole, int zcap);

namespace detail {

// integral of L0^i * h(z) dz/z with everything L1-free
inline LocalFunction integrate_l0_dz_over_z(int i, const ZSeries &h, int zcap) {
    LocalFunction out;
    Rat c = h.constant_term();
    if (c != 0)
        out.accumulate(i + 1, 0, ZSeries::constant(c / Rat(i + 1)));
    ZSeries g = (h - ZSeries::constant(c)).truncated(zcap);
    if (g.is_zero() && g.trunc >= ZSeries::kExact)
        return out;
    // by parts: int L0^i g dz/z = L0^i G - i * int L0^{i-1} G dz/z, G = int g dz/z
    ZSeries big_g = g.divided_by_z().integrated().truncated(zcap);
    out.accumulate(i, 0, big_g);
    if (i >= 1) {
        LocalFunction rest = integrate_l0_dz_over_z(i - 1, big_g, zcap);
        out = out + rest.scaled(-i);
    }
    return out;
}

} // namespace detail

inline LocalFunction integrate_form(const LocalFunction &f, Pole pole, int zcap) {
    LocalFunction out;
    for (auto &[k, s] : f.table()) {
        auto [i, j] = k;
        if (pole == Pole::Zero) {
            ZSeries h = s;
            if (j > 0) // expand the L1 content; the product vanishes at 0
                h = (s * lambda1_power_series(j, zcap)).truncated(zcap);
            out = out + detail::integrate_l0_dz_over_z(i, h, zcap);
        } else if (i == 0) {
            // against dz/(z-1) = dL1: constant part raises the L1 degree,
            // the rest is expanded and integrated termwise
            Rat c = s.constant_term();
            if (c != 0)
                out.accumulate(0, j + 1, ZSeries::constant(c / Rat(j + 1)));
            ZSeries g = s - ZSeries::constant(c);
            if (!g.is_zero() || g.trunc < ZSeries::kExact) {
                ZSeries h = g.truncated(zcap);
                if (j > 0)
                    h = (h * lambda1_power_series(j, zcap)).truncated(zcap);
                out.accumulate(0, 0,
                               h.divided_by_one_minus_z().scaled(-1).integrated().truncated(zcap));
            }
        } else {
            // by parts lowering the L0 power:
            // int L0^i X dL1 = L0^i Y - i * int L0^{i-1} Y dz/z, Y = int X dL1
            LocalFunction x;
            x.set(0, j, s);
            LocalFunction y = integrate_form(x, Pole::One, zcap);
            out = out + y.log_shifted(i, 0, 1);
            out = out + integrate_form(y.log_shifted(i - 1, 0, 1), Pole::Zero, zcap).scaled(-i);
        }
    }
    return out;
}

} // namespace pmzv
