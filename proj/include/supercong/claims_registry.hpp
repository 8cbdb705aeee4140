#pragma once

// Registry entries for every verified congruence/identity: the statement,
// its stated and checked domains, and the two evaluators. Kept out of
// claims.hpp for readability; include claims.hpp, not this file.

#include <cstdint>

namespace supercong {

namespace detail {

inline u64 apply_sign(u64 x, int sign, u64 m) {
    return (sign >= 0 || x == 0) ? x : m - x;
}

/// Flatten a valuation-tracked value to an absolute residue mod p^e.
inline u64 residue_at(const PadicResidue& r, const PrimeContext& cx, int e) {
    if (r.valuation >= e) return 0;
    const u64 m = cx.modulus(e);
    return mulmod(cx.modulus(static_cast<int>(r.valuation)) % m, r.unit % m, m);
}

} // namespace detail

inline const std::vector<ClaimSpec>& registry() {
    static const std::vector<ClaimSpec> claims = [] {
        using detail::apply_sign;
        using detail::residue_at;
        using detail::smod;
        std::vector<ClaimSpec> v;

        const auto odd3 = [](u64 p) { return p >= 3 && p % 2 == 1; };
        const auto gt3  = [](u64 p) { return p > 3 && p % 2 == 1; };
        const auto ge5  = [](u64 p) { return p >= 5 && p % 2 == 1; };
        const auto any1 = [](u64 n) { return n >= 1; };

        // ---------- the 4k+1 series, mod p^4 ----------
        {
            ClaimSpec c;
            c.id = "thm11_half";
            c.statement = "sum_{k=0}^{(p-1)/2} (4k+1) C(2k,k)^3/(-64)^k == p(-1/p) + p^3 E_{p-3}  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "odd primes";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_cbc_sum(4, 1, -64, (p - 1) / 2));
                R.push_back(Rational(Integer(cx.legendre()) * p + pow_integer(p, 3) * cx.euler_exact_value()));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_cbc_sum(cx, 4, 4, 1, -64, (p - 1) / 2));
                R.push_back(addmod(apply_sign(p % m, cx.legendre(), m),
                                   mulmod(cx.modulus(3), cx.euler_mod(), m), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "thm11_full";
            c.statement = "sum_{k=0}^{p-1} (4k+1) C(2k,k)^3/(-64)^k == p(-1/p) + p^3 E_{p-3}  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "odd primes";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_cbc_sum(4, 1, -64, p - 1));
                R.push_back(Rational(Integer(cx.legendre()) * p + pow_integer(p, 3) * cx.euler_exact_value()));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_cbc_sum(cx, 4, 4, 1, -64, p - 1));
                R.push_back(addmod(apply_sign(p % m, cx.legendre(), m),
                                   mulmod(cx.modulus(3), cx.euler_mod(), m), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "thm11_full_eq_half";
            c.statement = "sum_{k=0}^{p-1} (4k+1) C(2k,k)^3/(-64)^k == sum_{k=0}^{(p-1)/2} (same)  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "odd primes";
            c.checked_domain = "odd primes";
            c.stated_ok = odd3;
            c.checked_ok = odd3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_cbc_sum(4, 1, -64, p - 1));
                R.push_back(detail::oracle_cbc_sum(4, 1, -64, (p - 1) / 2));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                L.push_back(detail::fast_cbc_sum(cx, 4, 4, 1, -64, cx.p() - 1));
                R.push_back(detail::fast_cbc_sum(cx, 4, 4, 1, -64, (cx.p() - 1) / 2));
            };
            v.push_back(std::move(c));
        }

        // ---------- the 20k+3 series, mod p^4 ----------
        {
            ClaimSpec c;
            c.id = "thm12";
            c.statement = "sum_{k=0}^{(p-1)/2} (20k+3)/(-2^10)^k (4k)!/k!^4 == p(-1/p)(2^(p-1)+2-(2^(p-1)-1)^2)  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_m4_sum(20, 3, -1024, (p - 1) / 2));
                const Integer t = pow_integer(2, p - 1);
                R.push_back(Rational(Integer(cx.legendre()) * p * (t + 2 - (t - 1) * (t - 1))));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_m4_sum(cx, 4, 20, 3, -1024, (p - 1) / 2));
                const u64 t = powmod(2, p - 1, m);
                const u64 tm1 = submod(t, 1, m);
                const u64 x = submod(addmod(t, 2 % m, m), mulmod(tm1, tm1, m), m);
                R.push_back(apply_sign(mulmod(p % m, x, m), cx.legendre(), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "eq13";
            c.statement = "sum_{k=0}^{p-1} (20k+3)/(-2^10)^k (4k)!/k!^4 == 3p(-1/p) + 3p^3 E_{p-3}  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "odd primes (stated without surviving proof)";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_m4_sum(20, 3, -1024, p - 1));
                R.push_back(Rational(Integer(3) * cx.legendre() * p + 3 * pow_integer(p, 3) * cx.euler_exact_value()));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_m4_sum(cx, 4, 20, 3, -1024, p - 1));
                R.push_back(addmod(apply_sign((3 * p) % m, cx.legendre(), m),
                                   mulmod(mulmod(3, cx.modulus(3), m), cx.euler_mod(), m), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "conj14";
            c.statement = "sum_{k=0}^{p-1} (7k+1)/648^k (4k)!/k!^4 == p(-1/p) - (5/3) p^3 E_{p-3}  (mod p^4)";
            c.modulus_exponent = 4;
            c.conjecture = true;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_m4_sum(7, 1, 648, p - 1));
                R.push_back(Rational(Integer(cx.legendre()) * p) -
                            Rational(5, 3) * pow_integer(p, 3) * cx.euler_exact_value());
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_m4_sum(cx, 4, 7, 1, 648, p - 1));
                const u64 c53 = mulmod(mulmod(5 % p, mod_inverse(3 % p, p), p), cx.euler_mod(), p);
                R.push_back(submod(apply_sign(p % m, cx.legendre(), m),
                                   mulmod(cx.modulus(3), c53, m), m));
            };
            v.push_back(std::move(c));
        }

        // ---------- the 6k+1 series, mod p^4 ----------
        {
            ClaimSpec c;
            c.id = "long";
            c.statement = "sum_{k=0}^{(p-1)/2} (6k+1) C(2k,k)^3/256^k == p(-1/p)  (mod p^4)";
            c.modulus_exponent = 4;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(detail::oracle_cbc_sum(6, 1, 256, (p - 1) / 2));
                R.push_back(Rational(Integer(cx.legendre()) * p));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4);
                L.push_back(detail::fast_cbc_sum(cx, 4, 6, 1, 256, (p - 1) / 2));
                R.push_back(apply_sign(p % m, cx.legendre(), m));
            };
            v.push_back(std::move(c));
        }

        // ---------- classical lemmas ----------
        {
            ClaimSpec c;
            c.id = "wolst_h1";
            c.statement = "sum_{k=1}^{p-1} 1/k == 0  (mod p^2)";
            c.modulus_exponent = 2;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                L.push_back(harmonic(cx.p() - 1));
                R.push_back(Rational(0));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(2);
                u64 acc = 0;
                for (u64 k = 1; k < p; ++k) acc = addmod(acc, mod_inverse(k, m), m);
                L.push_back(acc);
                R.push_back(0);
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "wolst_h2";
            c.statement = "sum_{k=1}^{p-1} 1/k^2 == 0  (mod p)";
            c.modulus_exponent = 1;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                Rational acc(0);
                for (u64 k = 1; k < cx.p(); ++k) acc += Rational(Integer(1), Integer(k) * k);
                L.push_back(acc);
                R.push_back(Rational(0));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p();
                u64 acc = 0;
                for (u64 k = 1; k < p; ++k) {
                    const u64 i = mod_inverse(k, p);
                    acc = addmod(acc, mulmod(i, i, p), p);
                }
                L.push_back(acc);
                R.push_back(0);
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "wolst_binom";
            c.statement = "C(2p-1,p-1) == 1  (mod p^3)";
            c.modulus_exponent = 3;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(Rational(binomial(Integer(2 * p - 1), Integer(p - 1))));
                R.push_back(Rational(1));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p();
                L.push_back(residue_at(cx.factorials().binomial(2 * p - 1, p - 1), cx, 3));
                R.push_back(1 % cx.modulus(3));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "morley";
            c.statement = "C(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1)  (mod p^3)";
            c.modulus_exponent = 3;
            c.stated_domain = "primes p > 3";
            c.checked_domain = "primes p > 3";
            c.stated_ok = gt3;
            c.checked_ok = gt3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(Rational(binomial(Integer(p - 1), Integer((p - 1) / 2))));
                R.push_back(Rational(Integer(cx.legendre()) * pow_integer(4, p - 1)));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(3);
                L.push_back(residue_at(cx.factorials().binomial(p - 1, (p - 1) / 2), cx, 3));
                R.push_back(apply_sign(powmod(4, p - 1, m), cx.legendre(), m));
            };
            v.push_back(std::move(c));
        }

        // ---------- the Euler-number lemmas, mod p ----------
        {
            ClaimSpec c;
            c.id = "sun24";
            c.statement = "sum_{k=1}^{(p-1)/2} 4^k/((2k-1) C(2k,k)) == E_{p-3} - 1 + (-1/p)  (mod p)";
            c.modulus_exponent = 1;
            c.stated_domain = "odd primes";
            c.checked_domain = "odd primes";
            c.stated_ok = odd3;
            c.checked_ok = odd3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                Rational acc(0);
                Integer cb = 1, pw4 = 1;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    cb *= (2 * k) * (2 * k - 1);
                    cb /= k * k;
                    pw4 *= 4;
                    acc += Rational(pw4, Integer(2 * k - 1) * cb);
                }
                L.push_back(acc);
                R.push_back(Rational(cx.euler_exact_value() - 1 + cx.legendre()));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p();
                u64 acc = 0, pw4 = 1 % p;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    pw4 = mulmod(pw4, 4 % p, p);
                    const u64 cb = cx.factorials().binomial(2 * k, k).unit % p;
                    acc = addmod(acc, mulmod(pw4, mod_inverse(mulmod((2 * k - 1) % p, cb, p), p), p), p);
                }
                L.push_back(acc);
                R.push_back(smod(static_cast<std::int64_t>(cx.euler_mod()) - 1 + cx.legendre(), p));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "sun25";
            c.statement = "sum_{k=1}^{(p-1)/2} 4^k/(k(2k-1) C(2k,k)) == 2 E_{p-3}  (mod p)";
            c.modulus_exponent = 1;
            c.stated_domain = "odd primes";
            c.checked_domain = "odd primes";
            c.stated_ok = odd3;
            c.checked_ok = odd3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                Rational acc(0);
                Integer cb = 1, pw4 = 1;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    cb *= (2 * k) * (2 * k - 1);
                    cb /= k * k;
                    pw4 *= 4;
                    acc += Rational(pw4, Integer(k) * (2 * k - 1) * cb);
                }
                L.push_back(acc);
                R.push_back(Rational(2 * cx.euler_exact_value()));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p();
                u64 acc = 0, pw4 = 1 % p;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    pw4 = mulmod(pw4, 4 % p, p);
                    const u64 cb = cx.factorials().binomial(2 * k, k).unit % p;
                    const u64 den = mulmod(mulmod(k % p, (2 * k - 1) % p, p), cb, p);
                    acc = addmod(acc, mulmod(pw4, mod_inverse(den, p), p), p);
                }
                L.push_back(acc);
                R.push_back(mulmod(2 % p, cx.euler_mod(), p));
            };
            v.push_back(std::move(c));
        }

        // ---------- lemmas for the 20k+3 proof ----------
        {
            ClaimSpec c;
            c.id = "lemma31";
            c.statement = "C((p-1)/2+k,2k) == C(2k,k)/(-16)^k  (mod p^2), for every k = 0..(p-1)/2";
            c.modulus_exponent = 2;
            c.stated_domain = "odd primes";
            c.checked_domain = "odd primes";
            c.stated_ok = odd3;
            c.checked_ok = odd3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p(), mhalf = (p - 1) / 2;
                for (u64 k = 0; k <= mhalf; ++k) {
                    L.push_back(Rational(binomial(Integer(mhalf + k), Integer(2 * k))));
                    R.push_back(Rational(binomial(Integer(2 * k), Integer(k))) *
                                pow_rational(Rational(-16), -static_cast<std::int64_t>(k)));
                }
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(2), mhalf = (p - 1) / 2;
                const u64 inv16 = mod_inverse(16 % m, m);
                u64 pw = 1 % m;
                for (u64 k = 0; k <= mhalf; ++k) {
                    L.push_back(cx.factorials().binomial(mhalf + k, 2 * k).unit % m);
                    u64 r = mulmod(cx.factorials().binomial(2 * k, k).unit % m, pw, m);
                    if (k & 1) r = (r == 0 ? 0 : m - r);
                    R.push_back(r);
                    pw = mulmod(pw, inv16, m);
                }
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "lehmer32";
            c.statement = "H_{(p-1)/2} == -2 q_p(2) + p q_p(2)^2  (mod p^2)";
            c.modulus_exponent = 2;
            c.stated_domain = "odd primes";
            c.checked_domain = "odd primes";
            c.stated_ok = odd3;
            c.checked_ok = odd3;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                L.push_back(harmonic((p - 1) / 2));
                const Integer& q = cx.fermat_quotient_exact();
                R.push_back(Rational(-2 * q + Integer(p) * q * q));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(2);
                u64 acc = 0;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) acc = addmod(acc, mod_inverse(k, m), m);
                L.push_back(acc);
                const u64 q = cx.fermat_quotient_mod(2);
                const u64 qq = mulmod(q % p, q % p, p);
                R.push_back(submod(mulmod(p, qq, m), mulmod(2, q, m), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "lemma33";
            c.statement = "sum_{k=1}^{(p-1)/2} H_{k-1}/k == 2 q_p(2)^2  (mod p)";
            c.modulus_exponent = 1;
            c.stated_domain = "odd primes";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                Rational acc(0), h(0);
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    acc += h / k;
                    h += Rational(1, k);
                }
                L.push_back(acc);
                const Integer& q = cx.fermat_quotient_exact();
                R.push_back(Rational(2 * q * q));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p();
                u64 acc = 0, h = 0;
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    const u64 ik = mod_inverse(k, p);
                    acc = addmod(acc, mulmod(h, ik, p), p);
                    h = addmod(h, ik, p);
                }
                L.push_back(acc);
                const u64 q = cx.fermat_quotient_mod(1);
                R.push_back(mulmod(2 % p, mulmod(q, q, p), p));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "lemma34";
            c.statement = "(6m+1)/2^(8m) C(6m,3m) C(3m,m) == p(-1/p)  (mod p^4), m = (p-1)/2";
            c.modulus_exponent = 4;
            c.stated_domain = "odd primes";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p(), mm = (p - 1) / 2;
                L.push_back(Rational(Integer(6 * mm + 1) * binomial(Integer(6 * mm), Integer(3 * mm)) *
                                     binomial(Integer(3 * mm), Integer(mm)),
                                     pow_integer(2, 8 * mm)));
                R.push_back(Rational(Integer(cx.legendre()) * p));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(4), mm = (p - 1) / 2;
                const PadicResidue b1 = cx.factorials().binomial(6 * mm, 3 * mm);
                const PadicResidue b2 = cx.factorials().binomial(3 * mm, mm);
                const long vtot = b1.valuation + b2.valuation;
                u64 lhs = 0;
                if (vtot < 4) {
                    u64 u = mulmod(b1.unit % m, b2.unit % m, m);
                    u = mulmod(u, (6 * mm + 1) % m, m);
                    u = mulmod(u, mod_inverse(powmod(2, 8 * mm, m), m), m);
                    lhs = mulmod(u, cx.modulus(static_cast<int>(vtot)), m);
                }
                L.push_back(lhs);
                R.push_back(apply_sign(p % m, cx.legendre(), m));
            };
            v.push_back(std::move(c));
        }
        {
            ClaimSpec c;
            c.id = "eq35";
            c.statement = "prod_{p/2<j<p} (1 + 2p/j) == 2^(4(p-1))  (mod p^3)";
            c.modulus_exponent = 3;
            c.stated_domain = "odd primes";
            c.checked_domain = "primes p >= 5";
            c.stated_ok = odd3;
            c.checked_ok = ge5;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 p = cx.p();
                Rational prod(1);
                for (u64 j = (p + 1) / 2; j < p; ++j) prod *= 1 + Rational(Integer(2 * p), Integer(j));
                L.push_back(prod);
                R.push_back(Rational(pow_integer(2, 4 * (p - 1))));
            };
            c.fast = [](const PrimeContext& cx, std::vector<u64>& L, std::vector<u64>& R) {
                const u64 p = cx.p(), m = cx.modulus(3);
                u64 prod = 1 % m;
                for (u64 j = (p + 1) / 2; j < p; ++j)
                    prod = mulmod(prod, addmod(1, mulmod((2 * p) % m, mod_inverse(j, m), m), m), m);
                L.push_back(prod);
                R.push_back(powmod(2, 4 * (p - 1), m));
            };
            v.push_back(std::move(c));
        }

        // ---------- exact identity behind the equivalence of the two
        // ---------- Euler-number lemmas (no prime, index n)
        {
            ClaimSpec c;
            c.id = "remark21_identity";
            c.statement = "(1/2) sum_{k=1}^{n} 4^k/(k C(2k,k)) = 4^n/C(2n,n) - 1   (exact, all n >= 1)";
            c.modulus_exponent = 0;
            c.stated_domain = "integers n >= 1";
            c.checked_domain = "integers n >= 1";
            c.stated_ok = any1;
            c.checked_ok = any1;
            c.oracle = [](const PrimeContext& cx, std::vector<Rational>& L, std::vector<Rational>& R) {
                const u64 n = cx.p(); // index, not a prime
                Rational acc(0);
                Integer cb = 1, pw4 = 1;
                for (u64 k = 1; k <= n; ++k) {
                    cb *= (2 * k) * (2 * k - 1);
                    cb /= k * k;
                    pw4 *= 4;
                    acc += Rational(pw4, Integer(k) * cb);
                }
                L.push_back(acc / 2);
                R.push_back(Rational(pw4, cb) - 1);
            };
            c.fast = nullptr;
            v.push_back(std::move(c));
        }

        return v;
    }();
    return claims;
}

} // namespace supercong
