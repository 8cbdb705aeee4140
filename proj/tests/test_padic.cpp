#include <supercong/padic.hpp>
#include <supercong/sequences.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace supercong;

namespace {

u64 exact_mod(const Integer& x, u64 m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r.convert_to<u64>();
}

/// Legendre's formula, written directly as the floor sum it is.
long legendre_valuation(u64 n, u64 p) {
    long v = 0;
    for (u64 q = p; q <= n; q *= p) {
        v += static_cast<long>(n / q);
        if (q > n / p) break; // avoid overflow on q *= p
    }
    return v;
}

} // namespace

TEST_CASE("residue_of_rational spot values") {
    CHECK(residue_of_rational(Rational(3, 8), 3, 4) == 51);
    CHECK(residue_of_rational(Rational(0), 7, 3) == 0);
    CHECK(residue_of_rational(Rational(435, 512), 5, 4) == 505);
    CHECK(residue_of_rational(Rational(-120), 5, 4) == 505);
    CHECK_THROWS_AS(residue_of_rational(Rational(1, 5), 5, 4), NotPIntegral);
    CHECK_THROWS_AS(residue_of_rational(Rational(7, 15), 3, 2), NotPIntegral);
}

TEST_CASE("valuation of rationals") {
    CHECK(valuation(Rational(243, 512), 3) == 5);
    CHECK(valuation(Rational(0), 7) == kValInfinity);
    CHECK(valuation(Rational(-5, 8), 5) == 1);
    CHECK(valuation(Rational(7, 9), 3) == -2);
    CHECK(valuation(Rational(18, 5), 3) == 2);
}

TEST_CASE("mod_inverse spot values and randomized property") {
    CHECK(mod_inverse(8, 3, 4) == 71);
    CHECK(mod_inverse(1, 13, 4) == 1);
    CHECK(mod_inverse(536, 5, 4) == 316);
    CHECK_THROWS_AS(mod_inverse(10, 5, 3), NotInvertible);

    std::mt19937_64 rng(4242);
    for (u64 p : {3ull, 5ull, 97ull}) {
        for (int k = 1; k <= 4; ++k) {
            const u64 m = pow_u64_checked(p, k);
            std::uniform_int_distribution<u64> dist(1, m - 1);
            int done = 0;
            while (done < 1000) {
                const u64 a = dist(rng);
                if (a % p == 0) continue;
                REQUIRE(mulmod(a, mod_inverse(a, m), m) == 1);
                ++done;
            }
        }
    }
}

TEST_CASE("factorial_padic matches Legendre's formula and the exact factorial") {
    const PadicFactorial f5 = factorial_padic(5, 5, 4);
    CHECK(f5.valuation == 1);
    CHECK(f5.unit == 24);
    const PadicFactorial f0 = factorial_padic(0, 7, 4);
    CHECK(f0.valuation == 0);
    CHECK(f0.unit == 1);
    const PadicFactorial f10 = factorial_padic(10, 5, 4);
    CHECK(f10.valuation == 2);
    CHECK(f10.unit == 152); // 10! = 5^2 * 145152, 145152 mod 625

    for (u64 p : primes_in(3, 100)) {
        PadicFactorialTable table(p, 4, 4 * p);
        Integer fact = 1;
        for (u64 n = 0; n <= 4 * p; ++n) {
            if (n > 0) fact *= n;
            const PadicFactorial f = table.factorial(n);
            REQUIRE(f.valuation == legendre_valuation(n, p));
            Integer unit_exact = fact;
            for (long i = 0; i < f.valuation; ++i) unit_exact /= p;
            REQUIRE(f.unit == exact_mod(unit_exact, table.modulus()));
        }
    }
}

TEST_CASE("binomial_padic spot values") {
    const PadicResidue b = binomial_padic(10, 5, 5, 4);
    CHECK(b.valuation == 0);
    CHECK(b.unit == 252);
    const PadicResidue c = binomial_padic(4, 2, 3, 4);
    CHECK(c.valuation == 1);
    CHECK(c.unit == 2);
}

TEST_CASE("central binomials around p pick up a carry") {
    // C(2(p-k), p-k) has positive valuation for 0 < k < p/2
    for (u64 p : {5ull, 7ull, 11ull, 13ull, 23ull}) {
        for (u64 k = 1; 2 * k < p; ++k) {
            const PadicResidue b = binomial_padic(2 * (p - k), p - k, p, 4);
            REQUIRE(b.valuation >= 1);
        }
    }
}

TEST_CASE("dual-path agreement: table binomials equal exact binomials reduced") {
    const std::vector<u64> primes = primes_in(3, 100);
    std::vector<PadicFactorialTable> tables[5];
    for (int k = 1; k <= 4; ++k)
        for (u64 p : primes) tables[k].emplace_back(p, k, 4 * p);

    long mismatches = 0;
    std::vector<Integer> row = {1}; // Pascal row, reused across all (p, k)
    for (u64 a = 0; a <= 4 * primes.back(); ++a) {
        if (a > 0) {
            row.push_back(1);
            for (u64 b = a - 1; b >= 1; --b) row[b] += row[b - 1];
        }
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            const u64 p = primes[pi];
            if (a > 4 * p) continue;
            for (int k = 1; k <= 4; ++k) {
                const PadicFactorialTable& t = tables[k][pi];
                for (u64 b = 0; b <= a; ++b) {
                    const PadicResidue got = t.binomial(a, b);
                    const u64 want = exact_mod(row[b], t.modulus());
                    if (got.residue() != want) ++mismatches;
                    const long v = valuation(Rational(row[b]), p);
                    if (v < k && got.valuation != v) ++mismatches;
                }
            }
        }
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("residue ring laws on random values") {
    std::mt19937_64 rng(99);
    for (u64 p : {3ull, 5ull, 13ull}) {
        for (int k : {1, 2, 4}) {
            const u64 m = pow_u64_checked(p, k);
            std::uniform_int_distribution<u64> dist(0, m - 1);
            for (int i = 0; i < 300; ++i) {
                const auto a = PadicResidue::from_residue(dist(rng), p, k);
                const auto b = PadicResidue::from_residue(dist(rng), p, k);
                const auto c = PadicResidue::from_residue(dist(rng), p, k);
                REQUIRE(((a + b) + c).residue() == (a + (b + c)).residue());
                REQUIRE((a * (b + c)).residue() == (a * b + a * c).residue());
                REQUIRE(((a * b) * c).residue() == (a * (b * c)).residue());
                REQUIRE((a + b).residue() == (b + a).residue());
                REQUIRE((a - a).residue() == 0);
            }
        }
    }
}

TEST_CASE("PadicResidue round trips exact rationals") {
    const auto r = PadicResidue::from_rational(Rational(435, 512), 5, 4);
    CHECK(r.valuation == 1); // 435 = 5 * 87
    CHECK(r.unit == residue_of_rational(Rational(87, 512), 5, 4));
    CHECK(r.residue() == 505);
    const auto s = PadicResidue::from_rational(Rational(75, 2), 5, 3);
    CHECK(s.valuation == 2);
    CHECK(s.residue() == residue_of_rational(Rational(75, 2), 5, 3));
    const auto z = PadicResidue::from_rational(Rational(0), 5, 3);
    CHECK(z.is_zero());
    CHECK(z.valuation == kValInfinity);
    CHECK_THROWS_AS(PadicResidue::from_rational(Rational(1, 5), 5, 2), NotPIntegral);
}
