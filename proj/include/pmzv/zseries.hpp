#pragma once

#include "pmzv/padic.hpp"
#include "pmzv/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmzv {

/**
 * Power series in z with exact rational coefficients, truncated at a tracked
 * trusted degree: coefficients of z^k for k <= trunc are correct, higher ones
 * unknown.  Exact polynomials carry trunc = kExact.
 */
struct ZSeries {
    static constexpr int kExact = 1 << 28;

    std::vector<Rat> c; // c[k] = coefficient of z^k; trailing zeros dropped
    int trunc = kExact;

    ZSeries() = default;
    explicit ZSeries(int trusted) : trunc(trusted) {}
    ZSeries(std::vector<Rat> coeffs, int trusted) : c(std::move(coeffs)), trunc(trusted) {
        normalize();
    }

    static ZSeries constant(const Rat &r) {
        ZSeries s;
        if (r != 0)
            s.c = {r};
        return s;
    }
    static ZSeries monomial(const Rat &r, int k) {
        ZSeries s;
        if (r != 0) {
            s.c.assign(k + 1, Rat(0));
            s.c[k] = r;
        }
        return s;
    }

    void normalize() {
        if (trunc < 0)
            throw PrecisionError("z-series degree exhausted");
        if (static_cast<int>(c.size()) > trunc + 1 && trunc < kExact)
            c.resize(trunc + 1);
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree_bound() const { return static_cast<int>(c.size()) - 1; }
    // order of vanishing at 0 (kExact for the zero series)
    int order() const {
        for (size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0)
                return static_cast<int>(k);
        return kExact;
    }
    Rat at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Rat(0); }
    Rat constant_term() const { return at(0); }

    ZSeries truncated(int d) const {
        ZSeries r = *this;
        r.trunc = std::min(trunc, d);
        r.normalize();
        return r;
    }

    friend ZSeries operator+(const ZSeries &a, const ZSeries &b) {
        ZSeries r(std::min(a.trunc, b.trunc));
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t k = 0; k < r.c.size(); ++k)
            r.c[k] = a.at(static_cast<int>(k)) + b.at(static_cast<int>(k));
        r.normalize();
        return r;
    }
    friend ZSeries operator-(const ZSeries &a, const ZSeries &b) { return a + b.scaled(-1); }

    ZSeries scaled(const Rat &r) const {
        ZSeries s(trunc);
        if (r == 0)
            return s;
        s.c = c;
        for (auto &x : s.c)
            x *= r;
        return s;
    }

    friend ZSeries operator*(const ZSeries &a, const ZSeries &b) {
        long long t = std::min<long long>(static_cast<long long>(a.trunc) + b.order(),
                                          static_cast<long long>(b.trunc) + a.order());
        ZSeries r(static_cast<int>(std::min<long long>(t, kExact)));
        if (a.is_zero() || b.is_zero())
            return r;
        int bound = std::min<int>(a.degree_bound() + b.degree_bound(), r.trunc);
        r.c.assign(bound + 1, Rat(0));
        for (int i = 0; i <= a.degree_bound(); ++i) {
            if (a.c[i] == 0)
                continue;
            for (int j = 0; j <= b.degree_bound() && i + j <= bound; ++j)
                if (b.c[j] != 0)
                    r.c[i + j] += a.c[i] * b.c[j];
        }
        r.normalize();
        return r;
    }

    ZSeries shifted_up() const { // multiply by z
        ZSeries r(trunc >= kExact ? kExact : trunc + 1);
        if (!is_zero()) {
            r.c.assign(c.size() + 1, Rat(0));
            for (size_t k = 0; k < c.size(); ++k)
                r.c[k + 1] = c[k];
        }
        return r;
    }

    ZSeries divided_by_z() const {
        if (constant_term() != 0)
            throw std::domain_error("series not divisible by z");
        ZSeries r(trunc >= kExact ? kExact : trunc - 1);
        if (!is_zero())
            r.c.assign(c.begin() + 1, c.end());
        r.normalize();
        return r;
    }

    ZSeries divided_by_one_minus_z() const { // = *this * (1 + z + z^2 + ...)
        if (trunc >= kExact)
            throw std::domain_error("divide by 1-z requires a truncated series");
        ZSeries r(trunc);
        if (is_zero())
            return r;
        r.c.assign(trunc + 1, Rat(0));
        Rat acc = 0;
        for (int k = 0; k <= trunc; ++k) {
            acc += at(k);
            r.c[k] = acc;
        }
        r.normalize();
        return r;
    }

    ZSeries times_one_minus_z() const { return *this - shifted_up(); }

    ZSeries derivative() const {
        ZSeries r(trunc >= kExact ? kExact : trunc - 1);
        if (degree_bound() >= 1) {
            r.c.assign(degree_bound(), Rat(0));
            for (int k = 1; k <= degree_bound(); ++k)
                r.c[k - 1] = c[k] * k;
        }
        r.normalize();
        return r;
    }

    // primitive with zero constant term
    ZSeries integrated() const {
        ZSeries r(trunc >= kExact ? kExact : trunc + 1);
        if (!is_zero()) {
            r.c.assign(c.size() + 1, Rat(0));
            for (size_t k = 0; k < c.size(); ++k)
                r.c[k + 1] = c[k] / Rat(k + 1);
        }
        return r;
    }

    Padic evaluate(const Padic &z) const {
        Padic acc = Padic::zero(z.prime(), z.precision());
        for (int k = degree_bound(); k >= 0; --k)
            acc = acc * z + Padic::from_rational(z.prime(), at(k), z.precision());
        return acc;
    }

    // equality of the trusted common part
    friend bool agree(const ZSeries &a, const ZSeries &b) {
        int t = std::min(a.trunc, b.trunc);
        int bound = std::min(std::max(a.degree_bound(), b.degree_bound()), t);
        for (int k = 0; k <= bound; ++k)
            if (a.at(k) != b.at(k))
                return false;
        return true;
    }
    bool operator==(const ZSeries &o) const { return trunc == o.trunc && c == o.c; }

    std::string str() const {
        std::string s;
        for (int k = 0; k <= degree_bound(); ++k) {
            if (at(k) == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += to_string(at(k)) + (k == 0 ? "" : "*z^" + std::to_string(k));
        }
        if (s.empty())
            s = "0";
        if (trunc < kExact)
            s += " + O(z^" + std::to_string(trunc + 1) + ")";
        return s;
    }
};

} // namespace pmzv
