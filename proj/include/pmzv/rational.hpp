#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmzv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int pow_int(const Int &base, unsigned e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline const Int &factorial(unsigned n) {
    static std::vector<Int> cache{1};
    while (cache.size() <= n)
        cache.push_back(cache.back() * Int(cache.size()));
    return cache[n];
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

// exponent of p in n; n must be nonzero
inline int valuation_of(Int n, const Int &p) {
    assert(n != 0);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int valuation_of(const Rat &r, const Int &p) {
    assert(r != 0);
    return valuation_of(numerator(r), p) - valuation_of(denominator(r), p);
}

inline Rat rat_pow(const Rat &x, int e) {
    if (e < 0) {
        if (x == 0)
            throw std::domain_error("rat_pow: zero to negative power");
        return Rat(1) / rat_pow(x, -e);
    }
    Rat r = 1, b = x;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Rat &r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// "a", "-a", "a/b"
inline Rat parse_rational(const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace pmzv
