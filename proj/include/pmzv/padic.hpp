#pragma once

#include "pmzv/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmzv {

/**
 * Element of Q_p with tracked absolute precision: value = p^val * unit + O(p^prec).
 *
 * The unit part is stored modulo p^(prec-val) and is coprime to p, so the
 * valuation is exact for any value that is nonzero to precision.  Arithmetic
 * propagates precision conservatively: additions report min of absolute
 * precisions, multiplications min of valuation-shifted precisions.  p = 2 is
 * rejected everywhere (the log/exp convergence domains assume p odd).
 */
class Padic {
  public:
    static constexpr int kExactPrec = 1 << 28; // used by exact constants such as branch 0

    Padic() = default;

    static Padic zero(long long p, int prec) {
        check_prime(p);
        Padic x;
        x.p_ = p;
        x.zero_ = true;
        x.val_ = prec;
        x.unit_ = 0;
        x.prec_ = prec;
        return x;
    }

    static Padic from_integer(long long p, const Int &n, int prec) {
        check_prime(p);
        return normalized(p, n, 0, prec);
    }

    static Padic from_rational(long long p, const Rat &r, int prec) {
        check_prime(p);
        if (r == 0)
            return zero(p, prec);
        Int num = numerator(r), den = denominator(r);
        int v = valuation_of(num, p) - valuation_of(den, p);
        num /= pow_int(p, valuation_of(num, p));
        den /= pow_int(p, valuation_of(den, p));
        if (v >= prec)
            return zero(p, prec);
        Int mod = pow_int(p, prec - v);
        Int u = mod_reduce(num * inverse_mod(den, mod, p), mod);
        return make(p, v, u, prec);
    }

    // value = p^val * unit + O(p^prec); unit need not be reduced or coprime yet
    static Padic from_unit(long long p, int val, const Int &unit, int prec) {
        check_prime(p);
        return normalized(p, unit, val, prec);
    }

    long long prime() const { return p_; }
    bool is_zero() const { return zero_; } // zero to tracked precision
    int precision() const { return prec_; }
    int valuation() const {
        if (zero_)
            throw std::domain_error("valuation of zero-to-precision value");
        return val_;
    }
    // valuation with zero treated as v >= prec
    int valuation_floor() const { return zero_ ? prec_ : val_; }
    const Int &unit_part() const { return unit_; }

    // exact integer representative in [0, p^prec) when val >= 0
    Int lift() const {
        if (zero_)
            return 0;
        if (val_ < 0)
            throw std::domain_error("lift of value with negative valuation");
        return mod_reduce(unit_ * pow_int(p_, val_), pow_int(p_, prec_));
    }

    Padic truncate_to(int prec) const {
        if (prec > prec_)
            throw std::invalid_argument("truncate_to: cannot raise precision");
        if (zero_ || val_ >= prec)
            return zero(p_, prec);
        return make(p_, val_, mod_reduce(unit_, pow_int(p_, prec - val_)), prec);
    }

    Padic operator-() const {
        if (zero_)
            return *this;
        Int mod = pow_int(p_, prec_ - val_);
        return make(p_, val_, mod_reduce(-unit_, mod), prec_);
    }

    friend Padic operator+(const Padic &x, const Padic &y) {
        x.check_same(y);
        int prec = std::min(x.prec_, y.prec_);
        if (x.zero_)
            return y.truncate_to(prec);
        if (y.zero_)
            return x.truncate_to(prec);
        int m = std::min(x.val_, y.val_);
        Int rep = x.unit_ * pow_int(x.p_, x.val_ - m) + y.unit_ * pow_int(x.p_, y.val_ - m);
        return normalized(x.p_, rep, m, prec);
    }

    friend Padic operator-(const Padic &x, const Padic &y) { return x + (-y); }

    friend Padic operator*(const Padic &x, const Padic &y) {
        x.check_same(y);
        // min over the two factors of (own valuation + other's precision)
        int prec = std::min(x.valuation_floor() + y.prec_, y.valuation_floor() + x.prec_);
        prec = std::min(prec, kExactPrec);
        if (x.zero_ || y.zero_)
            return zero(x.p_, prec);
        int v = x.val_ + y.val_;
        Int mod = pow_int(x.p_, prec - v);
        return make(x.p_, v, mod_reduce(x.unit_ * y.unit_, mod), prec);
    }

    Padic inverse() const {
        if (zero_)
            throw std::domain_error("division by zero-to-precision value");
        int rel = prec_ - val_;
        Int mod = pow_int(p_, rel);
        return make(p_, -val_, inverse_mod(unit_, mod, p_), rel - val_);
    }

    friend Padic operator/(const Padic &x, const Padic &y) { return x * y.inverse(); }

    Padic mul_rational(const Rat &r) const {
        if (r == 0)
            return zero(p_, kExactPrec);
        int vr = valuation_of(r, p_);
        int rel = std::max(prec_ - valuation_floor(), 1);
        return *this * from_rational(p_, r, vr + rel);
    }

    Padic pow(unsigned e) const {
        Padic r = from_integer(p_, 1, std::max(prec_ - valuation_floor(), 1));
        Padic b = *this;
        if (e == 0)
            return r;
        while (true) {
            if (e & 1)
                r = r * b;
            e >>= 1;
            if (!e)
                break;
            b = b * b;
        }
        return r;
    }

    // x == y up to the common tracked precision
    friend bool agree(const Padic &x, const Padic &y) { return (x - y).is_zero(); }

    bool operator==(const Padic &o) const {
        return p_ == o.p_ && zero_ == o.zero_ && val_ == o.val_ && unit_ == o.unit_ &&
               prec_ == o.prec_;
    }

    // little-endian base-p digits of the unit part
    std::vector<long long> digits() const {
        std::vector<long long> d;
        Int u = unit_;
        for (int i = 0; i < prec_ - val_ && !zero_; ++i) {
            d.push_back(static_cast<long long>(u % p_));
            u /= p_;
        }
        return d;
    }

    std::string str() const {
        if (zero_)
            return "0 + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
        std::string s;
        auto d = digits();
        bool first = true;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0)
                continue;
            int e = val_ + static_cast<int>(i);
            if (!first)
                s += " + ";
            first = false;
            if (e == 0)
                s += std::to_string(d[i]);
            else if (e == 1)
                s += std::to_string(d[i]) + "*" + std::to_string(p_);
            else
                s += std::to_string(d[i]) + "*" + std::to_string(p_) + "^" + std::to_string(e);
        }
        if (first)
            s += "0";
        return s + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    }

  private:
    static void check_prime(long long p) {
        if (p < 3)
            throw std::invalid_argument("prime must be odd (p = 2 is not supported)");
        if (p % 2 == 0)
            throw std::invalid_argument("prime must be odd");
        for (long long d = 3; d * d <= p; d += 2)
            if (p % d == 0)
                throw std::invalid_argument("not a prime: " + std::to_string(p));
    }

    void check_same(const Padic &o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("prime mismatch");
    }

    static Int mod_reduce(const Int &x, const Int &mod) {
        Int r = x % mod;
        if (r < 0)
            r += mod;
        return r;
    }

    static Int inverse_mod(const Int &u, const Int &mod, long long p) {
        if (mod == 1)
            return 0;
        Int a = mod_reduce(u, mod);
        if (a % p == 0)
            throw std::domain_error("inverse of non-unit");
        // phi(p^k) = p^k - p^(k-1)
        Int phi = mod - mod / p;
        return boost::multiprecision::powm(a, phi - 1, mod);
    }

    static Padic make(long long p, int val, const Int &unit, int prec) {
        Padic x;
        x.p_ = p;
        x.zero_ = false;
        x.val_ = val;
        x.unit_ = unit;
        x.prec_ = prec;
        return x;
    }

    // value = p^shift * rep + O(p^prec)
    static Padic normalized(long long p, Int rep, int shift, int prec) {
        if (prec > kExactPrec)
            prec = kExactPrec;
        if (prec <= shift)
            return zero(p, prec);
        if (prec - shift > 100000)
            throw std::logic_error("padic: materialized precision too large");
        Int mod = pow_int(p, prec - shift);
        rep = mod_reduce(rep, mod);
        if (rep == 0)
            return zero(p, prec);
        int extra = valuation_of(rep, Int(p));
        rep /= pow_int(p, extra);
        int val = shift + extra;
        if (val >= prec)
            return zero(p, prec);
        return make(p, val, mod_reduce(rep, pow_int(p, prec - val)), prec);
    }

    long long p_ = 3;
    bool zero_ = true;
    int val_ = 1;
    Int unit_ = 0;
    int prec_ = 1;
};

/// Branch of the p-adic logarithm, fixed by the value assigned to log(p).
/// a = 0 is the Iwasawa branch.
struct BranchParameter {
    Padic a;
    static BranchParameter iwasawa(long long p) { return {Padic::zero(p, Padic::kExactPrec)}; }
};

/// The unique (p-1)-st root of unity congruent to x mod p, computed by
/// iterating x <- x^p to its fixed point.
inline Padic teichmuller(const Padic &x) {
    if (x.is_zero() || x.valuation() != 0)
        throw std::domain_error("teichmuller: input must be a unit");
    long long p = x.prime();
    int n = x.precision();
    Int mod = pow_int(p, n);
    Int u = x.unit_part() % mod;
    for (int i = 0; i < n; ++i) {
        Int next = boost::multiprecision::powm(u, p, mod);
        if (next == u)
            break;
        u = next;
    }
    return Padic::from_unit(p, 0, u, n);
}

namespace detail {

// log(1+t) for v(t) >= 1, via an exact partial sum of the representative.
// The tail n > nmax has v(t^n/n) >= n*v(t) - floor(log_p n) >= prec, and the
// series has unit derivative on principal units, so full absolute precision
// is preserved.
inline Padic log_one_plus(const Padic &t) {
    long long p = t.prime();
    int prec = t.precision();
    if (t.is_zero())
        return Padic::zero(p, prec);
    int v = t.valuation();
    if (v < 1)
        throw std::domain_error("log series requires valuation >= 1");
    Rat that(t.lift());
    Rat sum = 0, power = 1;
    long long plog = 1; // floor(log_p n) tracked incrementally
    Int pk = p;
    for (int n = 1;; ++n) {
        while (pk <= n) {
            pk *= p;
            ++plog;
        }
        if (static_cast<long long>(n) * v - (plog - 1) >= prec && n > 1)
            break;
        power *= that;
        sum += (n % 2 ? power : -power) / n;
    }
    return Padic::from_rational(p, sum, prec);
}

} // namespace detail

/// log^a(z) = v(z)*a + log<u>, where z = p^v * omega(u) * <u> splits off the
/// prime power and the Teichmuller part (whose log vanishes).
inline Padic log_branch(const Padic &z, const BranchParameter &branch) {
    if (z.is_zero())
        throw std::domain_error("log of zero-to-precision value");
    long long p = z.prime();
    int v = z.valuation();
    int rel = z.precision() - v;
    Padic u = Padic::from_unit(p, 0, z.unit_part(), rel);
    Padic principal = u / teichmuller(u);
    Padic series = detail::log_one_plus(principal - Padic::from_integer(p, 1, rel));
    if (v == 0)
        return series;
    return branch.a.mul_rational(Rat(v)) + series;
}

/// exp(x) for v(x) >= 1 (p odd), by exact partial sums with the tail bound
/// v(x^n/n!) >= n*v(x) - (n-1)/(p-1).
inline Padic exp_p(const Padic &x) {
    long long p = x.prime();
    int prec = x.precision();
    if (x.is_zero())
        return Padic::from_integer(p, 1, prec);
    int v = x.valuation();
    if (v < 1)
        throw std::domain_error("exp_p requires valuation >= 1");
    Rat xhat(x.lift());
    Rat sum = 1, term = 1;
    for (int n = 1;; ++n) {
        // all terms from n on have valuation >= n*v - (n-1)/(p-1) >= prec
        if (Rat(n) * v - Rat(n - 1, p - 1) >= prec)
            break;
        term *= xhat / n;
        sum += term;
    }
    return Padic::from_rational(p, sum, prec);
}

} // namespace pmzv
