#pragma once

// Test-only reference computations. Nothing here calls into the library's
// algorithms; they exist to produce expected values independently.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

// Coin-problem DP: is n a non-negative combination of gens, for n in 0..limit.
inline std::vector<bool> coin_dp(const std::vector<std::uint64_t> &gens, std::uint64_t limit)
{
    std::vector<bool> ok(limit + 1, false);
    ok[0] = true;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        for (auto g : gens) {
            if (g <= n && ok[n - g]) {
                ok[n] = true;
                break;
            }
        }
    }
    return ok;
}

// Closure of X ∪ {1} under (s, t) -> s + t - 1, computed by repeated sweeps
// over a set until nothing new appears.
inline std::set<std::uint64_t> iterate_c_closure(const std::vector<std::uint64_t> &x, std::uint64_t bound)
{
    std::set<std::uint64_t> t{1};
    for (auto v : x) {
        if (v <= bound) {
            t.insert(v);
        }
    }
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::uint64_t> snapshot(t.begin(), t.end());
        for (auto s : snapshot) {
            for (auto u : snapshot) {
                if (s + u - 1 <= bound && t.insert(s + u - 1).second) {
                    grew = true;
                }
            }
        }
    }
    return t;
}

// Dense integer polynomials, index = exponent, truncated at n.
using poly = std::vector<mpz_class>;

inline poly poly_mul(const poly &a, const poly &b, std::size_t n)
{
    poly c(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// f(g) by Horner's rule on dense coefficient vectors.
inline poly poly_compose(const poly &f, const poly &g, std::size_t n)
{
    poly acc(n + 1, 0);
    for (std::size_t k = f.size(); k-- > 0;) {
        acc = poly_mul(acc, g, n);
        acc[0] += f[k];
    }
    return acc;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Catalan number C_k = binom(2k, k) / (k + 1).
inline mpz_class catalan(unsigned long k)
{
    return binomial(2 * k, k) / (k + 1);
}

inline bool trial_division_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace oracle
