#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPrimeError : Error {
    using Error::Error;
};
struct ZeroValuationError : Error {
    using Error::Error;
};

inline bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline void require_prime(long long p) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
}

// largest e with p^e | x
inline int p_valuation(const Int& x, long long p) {
    require_prime(p);
    if (x == 0) throw ZeroValuationError("valuation of zero is infinite");
    Int y = abs(x);
    Int pp = static_cast<unsigned long>(p);
    int e = 0;
    while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
        y /= pp;
        ++e;
    }
    return e;
}

inline int p_valuation(long long x, long long p) { return p_valuation(Int(static_cast<long>(x)), p); }

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int ipow(long long b, unsigned long e) { return ipow(Int(static_cast<long>(b)), e); }

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    for (long long q = 2; q <= n; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

// g = u*a + v*b, g >= 0
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// representative in [0, m)
inline Int floor_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int floor_div(const Int& a, const Int& m) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace specht
