#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace thetagrp {

using Int = mpz_class;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor-free modular reduction into [0, m).
inline Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a)
{
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 2-adic valuation; a must be nonzero.
inline unsigned long ord2(const Int& a)
{
    return mpz_scan1(a.get_mpz_t(), 0);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a / gcd64(a, b) * b;
}

inline std::int64_t mod64(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m; a must be a unit mod m.
std::int64_t inverse_mod64(std::int64_t a, std::int64_t m);

// Positive divisors of n > 0 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Prime factorization of n > 1 as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

} // namespace thetagrp
