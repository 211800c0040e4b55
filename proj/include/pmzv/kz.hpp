#pragma once

#include "pmzv/local_function.hpp"
#include "pmzv/word_poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmzv {

/// Li_W as a LocalFunction for W ending in B: all-B words take the closed
/// form (-L1)^m / m!, everything else the truncated series expansion.
inline LocalFunction li_local(const Word &w, int zdeg) {
    if (!w.in_m_prime())
        throw std::invalid_argument("li_local requires a word ending in B");
    int m = w.size();
    if (w == Word::run_b(m))
        return LocalFunction::log_monomial(0, m, Rat(m % 2 ? -1 : 1) / Rat(factorial(m)));
    return li_series(word_to_index(w), zdeg);
}

inline LocalFunction li_local(const WordPolynomial &x, int zdeg) {
    LocalFunction acc;
    for (auto &[w, c] : x.terms()) {
        if (w.is_empty())
            acc = acc + LocalFunction(c);
        else
            acc = acc + li_local(w, zdeg).scaled(c);
    }
    return acc;
}

/**
 * Local expansion at z = 0 of the fundamental KZ solution
 * G0 = 1 + sum_W J(W) W, to a weight bound and z-degree.
 */
struct KzSolution {
    int weight_bound = 0;
    int zdeg = 0;
    std::map<Word, LocalFunction> coeffs; // J(W); the unit term 1 is implicit

    const LocalFunction &j(const Word &w) const {
        static const LocalFunction zero;
        auto it = coeffs.find(w);
        return it == coeffs.end() ? zero : it->second;
    }
};

/**
 * Solve the KZ recursion for P = G0 * z^{-A} weight layer by weight layer:
 *   dP_W = (1/z) P_{W minus leading A} + (1/(z-1)) P_{W minus leading B}
 *          - (1/z) P_{W minus trailing A}
 * with every analytic part vanishing at 0, then assemble
 * J(W) = sum_k P_{W minus k trailing A's} * L0^k / k!.
 */
inline KzSolution solve_kz_recursion(int weight_bound, int zdeg) {
    if (weight_bound < 1)
        throw std::invalid_argument("weight bound must be >= 1");
    KzSolution sol;
    sol.weight_bound = weight_bound;
    sol.zdeg = zdeg;
    std::map<Word, LocalFunction> p;
    p[Word::empty()] = LocalFunction::one();
    for (int w = 1; w <= weight_bound; ++w) {
        for (const Word &word : Word::all_of_weight(w)) {
            LocalFunction acc;
            const LocalFunction &head = p.at(word.drop_first());
            acc = integrate_form(head, word.letter(0) == 0 ? Pole::Zero : Pole::One, zdeg);
            if (word.ends_with_a())
                acc = acc - integrate_form(p.at(word.drop_last()), Pole::Zero, zdeg);
            p[word] = acc;
        }
    }
    for (int w = 1; w <= weight_bound; ++w) {
        for (const Word &word : Word::all_of_weight(w)) {
            LocalFunction j;
            for (int k = 0; k <= word.trailing_a_count(); ++k) {
                const LocalFunction &pv = p.at(word.prefix(word.size() - k));
                j = j + pv.log_shifted(k, 0, Rat(1) / Rat(factorial(k)));
            }
            sol.coeffs[word] = j;
        }
    }
    return sol;
}

/**
 * The same solution assembled from the closed formulas: for W = V A^r with
 * V ending in B (or empty),
 *   J(W) = sum_{s+t=r} (-1)^{dp(W)+s} Li_{f'(V o A^s)} L0^t / t!
 * and J(A^r) = L0^r / r!.
 */
inline KzSolution explicit_g0(int weight_bound, int zdeg) {
    if (weight_bound < 1)
        throw std::invalid_argument("weight bound must be >= 1");
    KzSolution sol;
    sol.weight_bound = weight_bound;
    sol.zdeg = zdeg;
    for (int w = 1; w <= weight_bound; ++w) {
        for (const Word &word : Word::all_of_weight(w)) {
            int r = word.trailing_a_count();
            Word v = word.prefix(word.size() - r);
            LocalFunction j;
            if (v.is_empty()) {
                j = LocalFunction::log_monomial(r, 0, Rat(1) / Rat(factorial(r)));
            } else {
                int dp = word.depth();
                for (int s = 0; s <= r; ++s) {
                    int t = r - s;
                    WordPolynomial proj = proj_f_prime(shuffle(v, Word::run_a(s)));
                    Rat scale = Rat((dp + s) % 2 ? -1 : 1) / Rat(factorial(t));
                    j = j + li_local(proj, zdeg).log_shifted(t, 0, scale);
                }
            }
            sol.coeffs[word] = j;
        }
    }
    return sol;
}

/// Words where the two solutions disagree on the common trusted degree.
inline std::vector<Word> kz_dual_path_mismatches(const KzSolution &a, const KzSolution &b) {
    std::vector<Word> bad;
    for (int w = 1; w <= std::min(a.weight_bound, b.weight_bound); ++w)
        for (const Word &word : Word::all_of_weight(w))
            if (!agree(a.j(word), b.j(word)))
                bad.push_back(word);
    return bad;
}

/**
 * Check the KZ equation on every stored coefficient in pole-free form:
 *   z(1-z) J'(W) = (1-z) J(W') if W = A W',   -z J(W') if W = B W',
 * with J(empty) = 1.
 */
inline std::vector<Word> kz_equation_violations(const KzSolution &sol) {
    std::vector<Word> bad;
    LocalFunction one_minus_z = LocalFunction::series(ZSeries({Rat(1), Rat(-1)}, ZSeries::kExact));
    LocalFunction z_poly = LocalFunction::series(ZSeries::monomial(1, 1));
    for (auto &[word, j] : sol.coeffs) {
        LocalFunction lhs = derivative_mul_z_one_minus_z(j);
        Word tail = word.drop_first();
        LocalFunction jt = tail.is_empty() ? LocalFunction::one() : sol.j(tail);
        LocalFunction rhs =
            word.letter(0) == 0 ? one_minus_z * jt : z_poly * jt.scaled(-1);
        if (!agree(lhs, rhs))
            bad.push_back(word);
    }
    return bad;
}

} // namespace pmzv
