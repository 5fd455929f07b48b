#pragma once

// Brute-force reference computations for the acceptance suite.  Nothing here
// shares code with the library paths they check.

#include <cstdint>
#include <functional>
#include <vector>

namespace weissler::oracle {

// Coefficients of f^n by summing a_{j1} ... a_{jn} over every n-tuple of
// indices.
inline std::vector<double> nested_power(const std::vector<double>& a, unsigned n) {
    const std::size_t deg = a.size() - 1;
    std::vector<double> out(n * deg + 1, 0.0);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        double prod = 1.0;
        std::size_t k = 0;
        for (std::size_t j : idx) {
            prod *= a[j];
            k += j;
        }
        out[k] += prod;
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] > deg) idx[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

inline std::uint64_t factorial_u64(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// sum over compositions j_1 + ... + j_n = k (j_i >= 0) of k! / (j_1! ... j_n!),
// in exact integer arithmetic.
inline std::uint64_t multinomial_sum(unsigned n, unsigned k) {
    std::uint64_t total = 0;
    std::function<void(unsigned, unsigned, std::uint64_t)> rec =
        [&](unsigned parts_left, unsigned remaining, std::uint64_t denom) {
            if (parts_left == 1) {
                total += factorial_u64(k) / (denom * factorial_u64(remaining));
                return;
            }
            for (unsigned j = 0; j <= remaining; ++j)
                rec(parts_left - 1, remaining - j, denom * factorial_u64(j));
        };
    rec(n, k, 1);
    return total;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace weissler::oracle
