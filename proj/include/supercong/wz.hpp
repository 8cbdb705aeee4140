#pragma once

// The two hypergeometric WZ pairs behind the 4k+1 and 20k+3 series, their
// certificate identity F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k), the
// telescoped partial-sum identities that follow from it, and the binomial
// product rearrangement used on the second pair. Everything here is exact
// rational arithmetic; no prime is involved.

#include "exact.hpp"

#include <cstdint>
#include <vector>

namespace supercong {

enum class WzPair { One, Two };

namespace detail {

inline Rational sign_pm(std::int64_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

inline Rational pow4(std::int64_t e) { return pow_rational(Rational(4), e); }

} // namespace detail

// F for pair one:
//   (-1)^(n+k) (4n+1) / 4^(3n-k) * C(2n,n)^2 C(2n+2k,n+k) C(n+k,2k) / C(2k,k)
// and pair two:
//   (-1)^(n+k) (20n-2k+3) / 4^(5n-k)
//       * C(2n,n) C(4n+2k,2n+k) C(2n+k,2k) C(2n-k,n) / C(2k,k).
// With the generalized binomial convention both vanish for n < k; the grid
// checks test that rather than assume it.
inline Rational wz_f(WzPair pair, std::int64_t n, std::int64_t k) {
    if (pair == WzPair::One) {
        Rational r = detail::sign_pm(n + k) * (4 * n + 1) * detail::pow4(-(3 * n - k));
        r *= Rational(binomial(2 * n, n) * binomial(2 * n, n) * binomial(2 * n + 2 * k, n + k) * binomial(n + k, 2 * k),
                      binomial(2 * k, k));
        return r;
    }
    Rational r = detail::sign_pm(n + k) * (20 * n - 2 * k + 3) * detail::pow4(-(5 * n - k));
    r *= Rational(binomial(2 * n, n) * binomial(4 * n + 2 * k, 2 * n + k) * binomial(2 * n + k, 2 * k) * binomial(2 * n - k, n),
                  binomial(2 * k, k));
    return r;
}

// G for pair one:
//   (-1)^(n+k) (2n-1)^2 C(2n-2,n-1)^2 / (2(n-k) 4^(3(n-1)-k))
//       * C(2n-2+2k,n-1+k) C(n-1+k,2k) / C(2k,k),
// evaluated with the (n-k) factor cancelled against C(n-1+k,2k): the factor
// C(n-1+k,2k)/(n-k) is computed as prod_{i=n-k+1}^{n+k-1} i / (2k)!, so at
// n = k it takes the removable-singularity value 1/(2k) instead of blowing
// up (and the value at n = k is NOT zero; the certificate needs the limit).
// For n < k the value is 0.
//
// G for pair two is the printed form
//   (-1)^(n+k) / 4^(5n-4-k)
//       * n C(2n-1,n-1) C(4n+2k-2,2n+k-1) C(2n+k-1,2k) C(2n-k-1,n-1) / C(2k,k),
// which needs no special casing: the n factor kills n = 0 and
// C(2n+k-1,2k) vanishes for n < k.
inline Rational wz_g(WzPair pair, std::int64_t n, std::int64_t k) {
    if (pair == WzPair::One) {
        if (n < k) return Rational(0);
        Integer cancelled = 1; // prod_{i=n-k+1}^{n+k-1} i
        for (std::int64_t i = n - k + 1; i <= n + k - 1; ++i) cancelled *= i;
        Rational r = detail::sign_pm(n + k) * (2 * n - 1) * (2 * n - 1) * detail::pow4(-(3 * (n - 1) - k)) / 2;
        r *= Rational(binomial(2 * n - 2, n - 1) * binomial(2 * n - 2, n - 1) * binomial(2 * n - 2 + 2 * k, n - 1 + k) * cancelled,
                      factorial(2 * k) * binomial(2 * k, k));
        return r;
    }
    Rational r = detail::sign_pm(n + k) * detail::pow4(-(5 * n - 4 - k)) * n;
    r *= Rational(binomial(2 * n - 1, n - 1) * binomial(4 * n + 2 * k - 2, 2 * n + k - 1) * binomial(2 * n + k - 1, 2 * k) * binomial(2 * n - k - 1, n - 1),
                  binomial(2 * k, k));
    return r;
}

struct GridFailure {
    std::int64_t n = 0, k = 0;
    Rational lhs, rhs; // F(n,k-1)-F(n,k) vs G(n+1,k)-G(n,k)
};

struct GridCheckResult {
    WzPair pair;
    std::int64_t n_max = 0, k_max = 0;
    std::vector<GridFailure> failures; // empty iff the certificate holds everywhere
    bool ok() const { return failures.empty(); }
};

/// Tests F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) in exact rationals on
/// 0 <= n <= n_max, 1 <= k <= k_max; failures are ordered by (n, k).
inline GridCheckResult check_certificate(WzPair pair, std::int64_t n_max, std::int64_t k_max) {
    GridCheckResult out{pair, n_max, k_max, {}};
    for (std::int64_t n = 0; n <= n_max; ++n)
        for (std::int64_t k = 1; k <= k_max; ++k) {
            Rational lhs = wz_f(pair, n, k - 1) - wz_f(pair, n, k);
            Rational rhs = wz_g(pair, n + 1, k) - wz_g(pair, n, k);
            if (lhs != rhs) out.failures.push_back({n, k, lhs, rhs});
        }
    return out;
}

struct TelescopeCheck {
    Rational lhs; // sum_{n=0}^{N} F(n,0) - F(N,N)
    Rational rhs; // sum_{k=1}^{N} G(N+1,k)
    bool equal = false;
};

/// The finite-sum consequence of the certificate for either pair.
inline TelescopeCheck check_telescoping(WzPair pair, std::int64_t n_upper) {
    TelescopeCheck out;
    out.lhs = 0;
    for (std::int64_t n = 0; n <= n_upper; ++n) out.lhs += wz_f(pair, n, 0);
    out.lhs -= wz_f(pair, n_upper, n_upper);
    out.rhs = 0;
    for (std::int64_t k = 1; k <= n_upper; ++k) out.rhs += wz_g(pair, n_upper + 1, k);
    out.equal = out.lhs == out.rhs;
    return out;
}

struct PartialSumCheck {
    Rational lhs, rhs;
    bool equal = false;
};

// Pair-one partial-sum identity:
//   sum_{n=n_lo}^{m} (4n+1) C(2n,n)^3 / (-64)^n - (4m+1)/4^(2m) C(4m,2m) C(2m,m)
//     = sum_{k=1}^{m} (-1)^(m+k+1) (2m+1)^2 C(2m,m)^2 / (2(m+1-k) 4^(3m-k))
//           * C(2m+2k,m+k) C(m+k,2k) / C(2k,k).
// The correct lower limit is n_lo = 0; with n_lo = 1 the two sides differ
// by exactly F(0,0) = 1, which the tests document.
inline PartialSumCheck check_partial_sum_identity_one(std::int64_t m, std::int64_t n_lo = 0) {
    PartialSumCheck out;
    out.lhs = 0;
    for (std::int64_t n = n_lo; n <= m; ++n) {
        Integer c = binomial(2 * n, n);
        out.lhs += Rational((4 * n + 1) * c * c * c) * pow_rational(Rational(-64), -n);
    }
    out.lhs -= Rational((4 * m + 1) * binomial(4 * m, 2 * m) * binomial(2 * m, m)) * detail::pow4(-2 * m);
    out.rhs = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
        Rational term = detail::sign_pm(m + k + 1) * (2 * m + 1) * (2 * m + 1) * detail::pow4(-(3 * m - k)) / (2 * (m + 1 - k));
        Integer c = binomial(2 * m, m);
        term *= Rational(c * c * binomial(2 * m + 2 * k, m + k) * binomial(m + k, 2 * k), binomial(2 * k, k));
        out.rhs += term;
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

struct PartialSumCheckTwo {
    Rational lhs;        // sum_{n=0}^{N} (20n+3)/(-2^10)^n C(2n,n)^2 C(4n,2n)
                         //   - (18N+3)/2^(8N) C(6N,3N) C(3N,N)
    Rational rhs_first;  // (N+1) C(2N+1,N) sum form
    Rational rhs_second; // (N+1) C(2N+1,N) C(4N+2,N) rearranged sum form
    bool equal = false;  // all three agree
};

/// Pair-two partial-sum identity in both printed right-hand-side forms.
inline PartialSumCheckTwo check_partial_sum_identity_two(std::int64_t n_upper) {
    const std::int64_t N = n_upper;
    PartialSumCheckTwo out;
    out.lhs = 0;
    for (std::int64_t n = 0; n <= N; ++n) {
        Integer c = binomial(2 * n, n);
        out.lhs += Rational((20 * n + 3) * c * c * binomial(4 * n, 2 * n)) * pow_rational(Rational(-1024), -n);
    }
    out.lhs -= Rational((18 * N + 3) * binomial(6 * N, 3 * N) * binomial(3 * N, N)) * pow_rational(Rational(2), -8 * N);

    Rational sum1 = 0, sum2 = 0;
    for (std::int64_t k = 1; k <= N; ++k) {
        sum1 += detail::sign_pm(N + k + 1) * detail::pow4(-(5 * (N + 1) - 4 - k)) *
                Rational(binomial(4 * N + 2 * k + 2, 2 * N + k + 1) * binomial(2 * N + k + 1, 2 * k) * binomial(2 * N - k + 1, N),
                         binomial(2 * k, k));
        sum2 += detail::sign_pm(N + k + 1) * detail::pow4(-(5 * N + 1 - k)) *
                Rational(binomial(4 * N + 2 * k + 2, 2 * k) * binomial(3 * N + 2, N - k + 1),
                         binomial(2 * k, k));
    }
    out.rhs_first  = Rational((N + 1) * binomial(2 * N + 1, N)) * sum1;
    out.rhs_second = Rational((N + 1) * binomial(2 * N + 1, N) * binomial(4 * N + 2, N)) * sum2;
    out.equal = out.lhs == out.rhs_first && out.lhs == out.rhs_second;
    return out;
}

struct RearrangementCheck {
    Integer original;     // C(4N+2k+2,2N+k+1) C(2N+k+1,2k) C(2N-k+1,N)
    Integer intermediate; // C(4N+2k+2,2k) C(4N+2,2N-k+1) C(2N-k+1,N)
    Integer rearranged;   // C(4N+2k+2,2k) C(4N+2,N) C(3N+2,N-k+1)
    bool equal = false;
};

/// The two-step product rewriting used on the pair-two sum, checked exactly.
inline RearrangementCheck check_binomial_rearrangement(std::int64_t N, std::int64_t k) {
    RearrangementCheck out;
    out.original     = binomial(4 * N + 2 * k + 2, 2 * N + k + 1) * binomial(2 * N + k + 1, 2 * k) * binomial(2 * N - k + 1, N);
    out.intermediate = binomial(4 * N + 2 * k + 2, 2 * k) * binomial(4 * N + 2, 2 * N - k + 1) * binomial(2 * N - k + 1, N);
    out.rearranged   = binomial(4 * N + 2 * k + 2, 2 * k) * binomial(4 * N + 2, N) * binomial(3 * N + 2, N - k + 1);
    out.equal = out.original == out.intermediate && out.original == out.rearranged;
    return out;
}

} // namespace supercong
