#pragma once

// The named sequences and prime-indexed quantities the right-hand sides of
// the congruences are built from: Euler numbers (exact and mod p), harmonic
// numbers, the Fermat quotient q_p(2), the sign (-1)^((p-1)/2), and a prime
// sieve.

#include "exact.hpp"
#include "padic.hpp"

#include <cstdint>
#include <vector>

namespace supercong {

struct NonExactDivision : std::domain_error {
    explicit NonExactDivision(const std::string& what) : std::domain_error(what) {}
};

// Euler numbers E_0..E_n_max from the defining recurrence
//   E_0 = 1,  sum_{0<=k<=n, k even} C(n,k) E_{n-k} = 0   (n >= 1),
// solved for E_n. Odd-index values come out of the same recurrence (they
// are all zero, which the tests check rather than assume).
inline std::vector<Integer> euler_exact(std::uint64_t n_max) {
    std::vector<Integer> e(n_max + 1);
    e[0] = 1;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Integer acc = 0;
        Integer b = 1; // C(n,k), advanced two columns at a time
        for (std::uint64_t k = 2; k <= n; k += 2) {
            b *= (n - k + 2) * (n - k + 1);
            b /= (k - 1) * k;
            acc += b * e[n - k];
        }
        e[n] = -acc;
    }
    return e;
}

// Same recurrence with all arithmetic mod p. Requires n_max < p so that
// every k in the incremental binomial update is invertible; O(n_max^2)
// multiplications mod p in total.
inline std::vector<u64> euler_mod_p(u64 p, std::uint64_t n_max) {
    if (n_max >= p) throw std::invalid_argument("euler_mod_p: requires n_max < p");
    std::vector<u64> inv(n_max + 2, 1);
    for (std::uint64_t i = 2; i < inv.size(); ++i)
        inv[i] = mulmod(p - p / i, inv[p % i], p);
    std::vector<u64> e(n_max + 1, 0);
    e[0] = 1 % p;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        u64 acc = 0;
        u64 b = 1 % p;
        for (std::uint64_t k = 2; k <= n; k += 2) {
            b = mulmod(b, (n - k + 2) % p, p);
            b = mulmod(b, (n - k + 1) % p, p);
            b = mulmod(b, inv[k - 1], p);
            b = mulmod(b, inv[k], p);
            acc = addmod(acc, mulmod(b, e[n - k], p), p);
        }
        e[n] = acc == 0 ? 0 : p - acc;
    }
    return e;
}

/// H_n = sum_{0<k<=n} 1/k, exactly.
inline Rational harmonic(std::uint64_t n) {
    Rational acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) acc += Rational(1, k);
    return acc;
}

/// The Fermat quotient q_p(2) = (2^(p-1) - 1)/p. The division is exact for
/// every odd prime p; a remainder signals a composite argument.
inline Integer fermat_quotient2(u64 p) {
    Integer num = pow_integer(2, p - 1) - 1;
    Integer q, r;
    boost::multiprecision::divide_qr(num, Integer(p), q, r);
    if (r != 0) throw NonExactDivision("fermat_quotient2: p does not divide 2^(p-1) - 1");
    return q;
}

/// (-1/p) = (-1)^((p-1)/2) for odd p: +1 iff p = 1 (mod 4).
inline int legendre_minus_one(u64 p) { return p % 4 == 1 ? 1 : -1; }

/// Ascending primes in [lo, hi], by sieve of Eratosthenes.
inline std::vector<u64> primes_in(u64 lo, u64 hi) {
    if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
    std::vector<u64> out;
    if (hi < 2) return out;
    std::vector<bool> composite(hi + 1, false);
    for (u64 i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
    for (u64 i = lo < 2 ? 2 : lo; i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

} // namespace supercong
