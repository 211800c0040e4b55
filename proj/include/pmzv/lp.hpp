#pragma once

#include "pmzv/bernoulli.hpp"
#include "pmzv/padic.hpp"

#include <stdexcept>

namespace pmzv {

/// Evaluation request for the Kubota-Leopoldt L-function L_p(s, omega^twist).
struct LpSpec {
    long long prime;
    Padic s;
    int twist; // exponent of the Teichmuller character, mod p-1
};

namespace detail {

inline int reduce_twist(long long p, int twist) {
    int m = static_cast<int>(p - 1);
    return ((twist % m) + m) % m;
}

// one evaluation at fixed working precision; precision of the result is
// whatever conservative propagation yields
inline Padic lp_value_raw(const LpSpec &spec, int working_prec) {
    long long p = spec.prime;
    int i = reduce_twist(p, spec.twist);
    const int m = working_prec;
    Padic s = spec.s.precision() > m ? spec.s.truncate_to(m) : spec.s;
    Padic one = Padic::from_integer(p, 1, m);
    Padic one_minus_s = one - s;
    Padic acc = Padic::zero(p, m);
    for (long long a = 1; a < p; ++a) {
        Padic pa = Padic::from_integer(p, a, m);
        Padic omega = teichmuller(pa);
        Padic chi = omega.pow(static_cast<unsigned>(i) % static_cast<unsigned>(p - 1));
        Padic principal = pa / omega; // <a>, congruent to 1 mod p
        Padic power = exp_p(one_minus_s *
                            log_branch(principal, BranchParameter::iwasawa(p)));
        // sum_j binom(1-s, j) (p/a)^j B_j, truncated by the valuation bound
        Padic jsum = Padic::zero(p, m);
        Padic binom = Padic::from_integer(p, 1, m); // binom(1-s, j)
        Padic pa_ratio = Padic::from_rational(p, Rat(p, a), m + 2);
        Padic ratio_pow = Padic::from_integer(p, 1, m + 2);
        for (int j = 0;; ++j) {
            // v(term) >= j (1 - 1/(p-1)) - 1
            if (Rat(j) * (Rat(1) - Rat(1, p - 1)) - 1 >= m)
                break;
            Padic term = binom * ratio_pow;
            Rat bj = bernoulli_minus(static_cast<unsigned>(j));
            if (bj != 0)
                jsum = jsum + term.mul_rational(bj);
            binom = binom * (one_minus_s - Padic::from_integer(p, j, m)) /
                    Padic::from_integer(p, j + 1, m);
            ratio_pow = ratio_pow * pa_ratio;
        }
        acc = acc + chi * power * jsum;
    }
    Padic s_minus_1 = s - one;
    return acc / s_minus_1 / Padic::from_integer(p, p, m + 2);
}

} // namespace detail

/**
 * L_p(s, omega^twist) by the conductor-p finite interpolation sum
 *   (1/p) (1/(s-1)) sum_{a=1}^{p-1} omega^twist(a) <a>^{1-s}
 *                   sum_j binom(1-s, j) (p/a)^j B_j.
 * Requires s in Z_p and s != 1 (the formula has a pole at s = 1 for the
 * trivial twist; for other twists the sum degenerates to 0/0 there).
 */
inline Padic lp_value(const LpSpec &spec, int target_precision) {
    long long p = spec.prime;
    if (spec.s.prime() != p)
        throw std::invalid_argument("lp_value: prime mismatch in spec");
    if (!spec.s.is_zero() && spec.s.valuation() < 0)
        throw std::domain_error("lp_value: s must lie in Z_p");
    Padic s1 = spec.s - Padic::from_integer(p, 1, spec.s.precision());
    if (s1.is_zero()) {
        if (detail::reduce_twist(p, spec.twist) == 0)
            throw std::domain_error("lp_value: pole at s = 1 for the trivial twist");
        throw std::domain_error("lp_value: evaluation at s = 1 needs a limit; "
                                "pass s != 1 to the finite sum");
    }
    int vs1 = s1.valuation();
    for (int guard = 6; guard <= 48; guard += 6) {
        int m = target_precision + 1 + vs1 + guard;
        if (spec.s.precision() < m)
            throw PrecisionError("lp_value: s carries too little precision for the target");
        Padic out = detail::lp_value_raw(spec, m);
        if (out.precision() >= target_precision)
            return out.truncate_to(target_precision);
    }
    throw PrecisionError("lp_value: target precision unreachable");
}

/// Convenience wrapper for an exact rational s.
inline Padic lp_value_at(long long p, const Rat &s, int twist, int target_precision) {
    Rat s1 = s - 1;
    int vs1 = s1 == 0 ? 0 : std::max(valuation_of(s1, p), 0);
    int prec = target_precision + vs1 + 64;
    return lp_value({p, Padic::from_rational(p, s, prec), twist}, target_precision);
}

/**
 * zeta_p(n) = p^n / (p^n - 1) * L_p(n, omega^{1-n}) for n > 1.
 * The valuation of every computed value is observable on the result; the
 * code never assumes integrality.
 */
inline Padic zeta_p_numeric(int n, long long p, int target_precision) {
    if (n < 2)
        throw std::invalid_argument("zeta_p_numeric requires n >= 2");
    Padic lp = lp_value_at(p, Rat(n), 1 - n, target_precision);
    Int pn = pow_int(p, static_cast<unsigned>(n));
    return lp.mul_rational(Rat(pn, pn - 1)).truncate_to(target_precision);
}

} // namespace pmzv
