#pragma once

// Truncated p-adic arithmetic: residues mod p^k with explicit valuation
// tracking. Values are stored as p^valuation * unit with the unit coprime
// to p, which keeps binomials of arguments near and beyond p computable —
// the p-part is never mixed into a residue until a value is flattened to
// an absolute residue in [0, p^k).
//
// Precision contract: units built multiplicatively (factorials, binomials,
// powers, inverses) are exact residues of the true units mod p^k. Addition
// flattens to absolute residues, which stay correct mod p^k for p-integral
// operands; relative precision of the factored unit may shrink after a
// cancelling addition, so divide by positive-valuation values only before
// any addition has happened.

#include "exact.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace supercong {

using u64  = std::uint64_t;
using u128 = unsigned __int128;

/// Sentinel valuation for an exact zero (v_p(0) = +infinity).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

struct NotPIntegral : std::domain_error {
    explicit NotPIntegral(const std::string& what) : std::domain_error(what) {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b; // a, b < m < 2^63: no overflow
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

/// p^k as u64; throws when the modulus would not fit below 2^63.
inline u64 pow_u64_checked(u64 p, int k) {
    u64 acc = 1;
    for (int i = 0; i < k; ++i) {
        if (acc > (u64(1) << 62) / p)
            throw std::overflow_error("pow_u64_checked: modulus p^k exceeds 2^63");
        acc *= p;
    }
    return acc;
}

/// Inverse of a modulo m via extended Euclid; works for any modulus,
/// in particular prime powers p^k.
inline u64 mod_inverse(u64 a, u64 m) {
    a %= m;
    if (a == 0) throw NotInvertible("mod_inverse: argument divisible by modulus");
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
    std::int64_t x0 = 0, x1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    if (r0 != 1) throw NotInvertible("mod_inverse: argument shares a factor with the modulus");
    return static_cast<u64>(x0 < 0 ? x0 + static_cast<std::int64_t>(m) : x0);
}

/// Inverse mod p^k (the shape used throughout the congruence checks).
inline u64 mod_inverse(u64 a, u64 p, int k) { return mod_inverse(a, pow_u64_checked(p, k)); }

/// v_p of an exact rational; kValInfinity for zero. Negative when p divides
/// the reduced denominator.
inline long valuation(const Rational& r, u64 p) {
    if (r == 0) return kValInfinity;
    long v = 0;
    Integer n = numerator(r);
    Integer q, rem;
    for (;;) {
        boost::multiprecision::divide_qr(n, Integer(p), q, rem);
        if (rem != 0) break;
        n = q;
        ++v;
    }
    if (v > 0) return v;
    Integer d = denominator(r);
    for (;;) {
        boost::multiprecision::divide_qr(d, Integer(p), q, rem);
        if (rem != 0) break;
        d = q;
        --v;
    }
    return v;
}

inline long valuation(const Integer& n, u64 p) { return valuation(Rational(n), p); }

/// The unique residue c in [0, p^k) with r = c (mod p^k), i.e.
/// numerator = c * denominator (mod p^k). Requires r p-integral.
inline u64 residue_of_rational(const Rational& r, u64 p, int k) {
    const u64 m = pow_u64_checked(p, k);
    const Integer& den = denominator(r);
    if (den % p == 0)
        throw NotPIntegral("residue_of_rational: p divides the reduced denominator");
    Integer nm = numerator(r) % m;
    if (nm < 0) nm += m;
    const u64 n64 = nm.convert_to<u64>();
    const u64 d64 = (den % m).convert_to<u64>();
    return mulmod(n64, mod_inverse(d64, m), m);
}

// One p-integral value known modulo p^precision. Exact zero (and any value
// indistinguishable from zero at this precision) carries valuation
// kValInfinity and unit 0.
struct PadicResidue {
    u64 p = 0;
    int precision = 0;
    u64 modulus = 0;  // p^precision
    long valuation = kValInfinity;
    u64 unit = 0;     // coprime to p unless valuation is infinite

    PadicResidue() = default;
    PadicResidue(u64 p_, int precision_, long valuation_, u64 unit_)
        : p(p_), precision(precision_), modulus(pow_u64_checked(p_, precision_)),
          valuation(valuation_), unit(unit_ % modulus) {}

    static PadicResidue zero(u64 p, int precision) {
        return PadicResidue(p, precision, kValInfinity, 0);
    }

    /// Normalized from an absolute residue in [0, p^precision).
    static PadicResidue from_residue(u64 r, u64 p, int precision) {
        PadicResidue out = zero(p, precision);
        r %= out.modulus;
        if (r == 0) return out;
        long v = 0;
        while (r % p == 0) { r /= p; ++v; }
        out.valuation = v;
        out.unit = r;
        return out;
    }

    static PadicResidue from_integer(const Integer& x, u64 p, int precision) {
        return from_rational(Rational(x), p, precision);
    }

    static PadicResidue from_rational(const Rational& r, u64 p, int precision) {
        if (r == 0) return zero(p, precision);
        const long v = supercong::valuation(r, p);
        if (v < 0) throw NotPIntegral("PadicResidue: value is not p-integral");
        const Rational unit_part = r / pow_rational(Rational(p), v);
        PadicResidue out = zero(p, precision);
        out.valuation = v;
        out.unit = residue_of_rational(unit_part, p, precision);
        return out;
    }

    bool is_zero() const { return valuation >= precision; }

    /// Absolute residue p^valuation * unit in [0, p^precision).
    u64 residue() const {
        if (is_zero()) return 0;
        u64 shift = 1;
        for (long i = 0; i < valuation; ++i) shift *= p;
        return mulmod(shift, unit, modulus);
    }

    PadicResidue operator+(const PadicResidue& o) const {
        return from_residue(addmod(residue(), o.residue(), modulus), p, precision);
    }
    PadicResidue operator-(const PadicResidue& o) const {
        return from_residue(submod(residue(), o.residue(), modulus), p, precision);
    }
    PadicResidue operator-() const {
        const u64 r = residue();
        return from_residue(r == 0 ? 0 : modulus - r, p, precision);
    }
    PadicResidue operator*(const PadicResidue& o) const {
        if (is_zero() || o.is_zero()) return zero(p, precision);
        PadicResidue out = zero(p, precision);
        out.valuation = valuation + o.valuation;
        if (out.valuation >= precision) return zero(p, precision);
        out.unit = mulmod(unit, o.unit, modulus);
        return out;
    }
    PadicResidue operator/(const PadicResidue& o) const {
        if (o.is_zero()) throw NotInvertible("PadicResidue: division by a p-adic zero");
        if (is_zero()) return zero(p, precision);
        long v = valuation - o.valuation;
        if (v < 0) throw NotPIntegral("PadicResidue: quotient is not p-integral");
        PadicResidue out = zero(p, precision);
        out.valuation = v;
        out.unit = mulmod(unit, mod_inverse(o.unit, modulus), modulus);
        return out;
    }
    bool operator==(const PadicResidue& o) const { return residue() == o.residue(); }
};

/// n! = p^valuation * unit with the unit coprime to p, unit mod p^precision.
struct PadicFactorial {
    u64 n = 0;
    long valuation = 0;  // v_p(n!), Legendre's formula value
    u64 unit = 1;        // (n! / p^valuation) mod p^precision
};

// All factorials 0..n_max for one (p, precision), built with one modular
// multiplication per index. Immutable once constructed; share freely.
class PadicFactorialTable {
public:
    PadicFactorialTable(u64 p, int precision, std::size_t n_max)
        : p_(p), precision_(precision), modulus_(pow_u64_checked(p, precision)) {
        if (p < 2) throw std::invalid_argument("PadicFactorialTable: p must be at least 2");
        val_.resize(n_max + 1, 0);
        unit_.resize(n_max + 1, 1 % modulus_);
        for (std::size_t i = 1; i <= n_max; ++i) {
            u64 m = i;
            long e = 0;
            while (m % p == 0) { m /= p; ++e; }
            val_[i]  = val_[i - 1] + e;
            unit_[i] = mulmod(unit_[i - 1], m % modulus_, modulus_);
        }
    }

    u64 p() const { return p_; }
    int precision() const { return precision_; }
    u64 modulus() const { return modulus_; }
    std::size_t size() const { return val_.size(); }

    PadicFactorial factorial(std::size_t n) const {
        return PadicFactorial{n, val_[n], unit_[n]};
    }

    /// C(a,b) for 0 <= b <= a <= n_max.
    PadicResidue binomial(std::size_t a, std::size_t b) const {
        PadicResidue out = PadicResidue::zero(p_, precision_);
        out.valuation = val_[a] - val_[b] - val_[a - b];
        out.unit = mulmod(unit_[a], mod_inverse(mulmod(unit_[b], unit_[a - b], modulus_), modulus_), modulus_);
        if (out.valuation >= precision_) return PadicResidue::zero(p_, precision_);
        return out;
    }

private:
    u64 p_;
    int precision_;
    u64 modulus_;
    std::vector<long> val_;
    std::vector<u64> unit_;
};

/// Single-shot n! mod p^k with valuation (Legendre's formula by construction).
inline PadicFactorial factorial_padic(u64 n, u64 p, int precision) {
    const u64 m = pow_u64_checked(p, precision);
    PadicFactorial out;
    out.n = n;
    out.unit = 1 % m;
    for (u64 i = 1; i <= n; ++i) {
        u64 f = i;
        while (f % p == 0) { f /= p; ++out.valuation; }
        out.unit = mulmod(out.unit, f % m, m);
    }
    return out;
}

/// Single-shot C(a,b) mod p^k for 0 <= b <= a, with valuation tracking.
inline PadicResidue binomial_padic(u64 a, u64 b, u64 p, int precision) {
    PadicFactorialTable table(p, precision, a);
    return table.binomial(a, b);
}

} // namespace supercong
