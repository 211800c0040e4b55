#pragma once

#include "pmzv/rational.hpp"

#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace pmzv {

/// Optional on-disk cache location for the Bernoulli table ("" = disabled).
inline std::string &bernoulli_cache_dir() {
    static std::string dir;
    return dir;
}

namespace detail {

// Akiyama-Tanigawa recurrence; yields the B_1 = +1/2 convention,
// i.e. the coefficients of x / (1 - e^{-x}).
inline void extend_bernoulli(std::vector<Rat> &b, size_t n) {
    std::vector<Rat> row;
    b.clear();
    for (size_t m = 0; m <= n; ++m) {
        row.push_back(Rat(1, static_cast<int>(m) + 1));
        for (size_t j = m; j >= 1; --j)
            row[j - 1] = Rat(static_cast<int>(j)) * (row[j - 1] - row[j]);
        b.push_back(row[0]);
    }
}

inline std::vector<Rat> load_bernoulli_file(const std::string &path) {
    std::vector<Rat> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(parse_rational(line));
    }
    return out;
}

inline void store_bernoulli_file(const std::string &path, const std::vector<Rat> &b) {
    std::ofstream out(path, std::ios::trunc);
    for (auto &r : b)
        out << to_string(r) << "\n";
}

} // namespace detail

/// B_n in the x/(1-e^{-x}) convention (B_1 = +1/2), cached.  Entries are
/// written once and then only read, so concurrent readers are safe.
inline Rat bernoulli_plus(unsigned n) {
    static std::mutex mu;
    static std::vector<Rat> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty() && !bernoulli_cache_dir().empty())
        table = detail::load_bernoulli_file(bernoulli_cache_dir() + "/bernoulli.txt");
    if (table.size() <= n) {
        std::vector<Rat> rebuilt;
        detail::extend_bernoulli(rebuilt, n); // row state is local to the call sequence
        table = std::move(rebuilt);
        if (!bernoulli_cache_dir().empty())
            detail::store_bernoulli_file(bernoulli_cache_dir() + "/bernoulli.txt", table);
    }
    return table[n];
}

/// B_n in the t/(e^t - 1) convention (B_1 = -1/2), as used by the
/// interpolation sum of the p-adic L-function.
inline Rat bernoulli_minus(unsigned n) {
    Rat b = bernoulli_plus(n);
    return n % 2 ? -b : b;
}

} // namespace pmzv
