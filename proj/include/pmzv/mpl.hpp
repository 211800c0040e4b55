#pragma once

#include "pmzv/local_function.hpp"
#include "pmzv/padic.hpp"
#include "pmzv/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pmzv {

namespace detail {

// smallest cutoff C with v_p(tail term) >= target for every top index n > C,
// using v(z^n / (n_1^{k_1} ... n_m^{k_m})) >= n v(z) - w floor(log_p n)
inline int mpl_cutoff(long long p, int vz, int w, int target) {
    auto bound = [&](long long n) {
        long long t = 0;
        Int pk = p;
        while (pk <= n) {
            pk *= p;
            ++t;
        }
        return n * vz - static_cast<long long>(w) * t;
    };
    // past P = p^T with P vz >= max(2 target, 2 w, 2 w T) the bound stays above
    // target and block minima increase, so scanning up to P is exhaustive
    long long cap = p;
    long long t = 1;
    while (cap * vz < std::max<long long>({2 * target, 2 * w, 2 * w * t, p}))
        cap *= p, ++t;
    int c = 1;
    for (long long n = 1; n <= cap; ++n)
        if (bound(n) < target)
            c = static_cast<int>(n);
    return c;
}

} // namespace detail

/**
 * Numeric p-adic MPL on the open unit disk: the nested sum
 * sum_{0 < n_1 < ... < n_m <= C} z^{n_m} / (n_1^{k_1} ... n_m^{k_m})
 * evaluated in p-adic arithmetic with the cutoff C from the rigorous tail
 * bound.  Points with |z|_p >= 1 are rejected: analytic continuation to the
 * boundary is out of scope, and a silent wrong answer would be worse.
 */
inline Padic mpl_value(const MzvIndex &ix, const Padic &z, int target_precision) {
    long long p = z.prime();
    if (z.is_zero())
        return Padic::zero(p, std::max(target_precision, z.precision()));
    if (z.valuation() < 1)
        throw std::domain_error("mpl_value requires |z|_p < 1");
    int w = ix.weight();
    int vz = z.valuation();
    for (int guard = 4; guard <= 40; guard += 6) {
        int m = target_precision + guard;
        if (z.precision() < m)
            throw PrecisionError("mpl_value: z carries too little precision for the target");
        int cutoff = detail::mpl_cutoff(p, vz, w, m);
        // layer[n] = sum over chains ending exactly at n, in p-adic arithmetic
        std::vector<Padic> layer(cutoff + 1, Padic::zero(p, m));
        for (int n = 1; n <= cutoff; ++n)
            layer[n] = Padic::from_rational(p, Rat(1) / rat_pow(Rat(n), ix.ks[0]), m);
        for (int j = 1; j < ix.depth(); ++j) {
            std::vector<Padic> next(cutoff + 1, Padic::zero(p, m));
            Padic prefix = Padic::zero(p, m);
            for (int n = 1; n <= cutoff; ++n) {
                prefix = prefix + layer[n - 1];
                next[n] = prefix * Padic::from_rational(p, Rat(1) / rat_pow(Rat(n), ix.ks[j]), m);
            }
            layer = std::move(next);
        }
        Padic acc = Padic::zero(p, m);
        Padic zw = z.precision() > m ? z.truncate_to(m) : z;
        Padic zpow = Padic::from_integer(p, 1, m);
        for (int n = 1; n <= cutoff; ++n) {
            zpow = zpow * zw;
            acc = acc + layer[n] * zpow;
        }
        if (acc.precision() >= target_precision)
            return acc.truncate_to(target_precision);
    }
    throw PrecisionError("mpl_value: target precision unreachable");
}

/// Exact multiple Bernoulli numbers B_n^{(k_1,...,k_m)} for n = 0..n_max,
/// from the generating series Li(1-e^{-x}) / (1-e^{-x})^m.
struct MbnTable {
    MzvIndex index;
    std::vector<Rat> values;
};

namespace detail {

inline std::vector<Rat> poly_mul_cap(const std::vector<Rat> &a, const std::vector<Rat> &b,
                                     int cap) {
    std::vector<Rat> r(cap + 1, Rat(0));
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// multiplicative inverse of a series with unit constant term
inline std::vector<Rat> poly_inv_cap(const std::vector<Rat> &a, int cap) {
    std::vector<Rat> r(cap + 1, Rat(0));
    r[0] = Rat(1) / a[0];
    for (int n = 1; n <= cap; ++n) {
        Rat s = 0;
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
            s += a[k] * r[n - k];
        r[n] = -s / a[0];
    }
    return r;
}

} // namespace detail

inline MbnTable multiple_bernoulli(const MzvIndex &ix, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("multiple_bernoulli requires n_max >= 0");
    int m = ix.depth();
    int deg = n_max + m;
    // y = 1 - e^{-x}
    std::vector<Rat> y(deg + 1, Rat(0));
    for (int n = 1; n <= deg; ++n)
        y[n] = Rat(n % 2 ? 1 : -1) / Rat(factorial(static_cast<unsigned>(n)));
    // Li_ix(y) by Horner over the truncated series ring
    ZSeries li = li_series(ix, deg).entry(0, 0);
    std::vector<Rat> num{Rat(0)};
    for (int k = deg; k >= 0; --k) {
        num = detail::poly_mul_cap(num, y, deg);
        num[0] += li.at(k);
    }
    // divide by y^m: both sides have order >= m in x
    std::vector<Rat> y_unit(y.begin() + 1, y.end()); // y / x, unit series
    std::vector<Rat> num_shift(deg - m + 1, Rat(0));
    for (int k = m; k <= deg; ++k)
        num_shift[k - m] = num[k]; // num / x^m
    std::vector<Rat> denom_pow{Rat(1)};
    for (int i = 0; i < m; ++i)
        denom_pow = detail::poly_mul_cap(denom_pow, y_unit, n_max);
    std::vector<Rat> quotient =
        detail::poly_mul_cap(num_shift, detail::poly_inv_cap(denom_pow, n_max), n_max);
    MbnTable table{ix, {}};
    for (int n = 0; n <= n_max; ++n)
        table.values.push_back(quotient[n] * Rat(factorial(static_cast<unsigned>(n))));
    return table;
}

} // namespace pmzv
