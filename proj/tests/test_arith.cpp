#include <doctest.h>

#include <random>

#include "scrolls/arith.hpp"

using namespace scrolls;

namespace {

// Trial division up to sqrt(m); the reference for factorize.
std::vector<PrimePower> trial_division(unsigned long long m) {
    std::vector<PrimePower> out;
    for (unsigned long long p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            out.push_back({Integer(static_cast<unsigned long>(p)), e});
    }
    if (m > 1)
        out.push_back({Integer(static_cast<unsigned long>(m)), 1});
    return out;
}

std::vector<Integer> brute_signed_divisors(long m) {
    const long a = m < 0 ? -m : m;
    std::vector<Integer> out;
    for (long t = -a; t <= a; ++t)
        if (t != 0 && a % t == 0)
            out.emplace_back(t);
    return out;
}

}  // namespace

TEST_CASE("factorize small values") {
    CHECK(factorize(Integer(1)).factors.empty());

    const auto f = factorize(Integer(60480));
    const std::vector<PrimePower> want = {{Integer(2), 6}, {Integer(3), 3}, {Integer(5), 1}, {Integer(7), 1}};
    CHECK(f.factors == want);
    CHECK(f.product() == 60480);

    // 1100^2 + 5
    CHECK(factorize(Integer(1210005)).factors == trial_division(1210005));
}

TEST_CASE("factorize rejects non-positive input") {
    CHECK_THROWS_AS(factorize(Integer(0)), ArithError);
    CHECK_THROWS_AS(factorize(Integer(-12)), ArithError);
}

TEST_CASE("factorize needs rho for large semiprimes") {
    // Both primes exceed the trial-division bound.
    const Integer p("1000000007"), q("998244353");
    const auto f = factorize(p * q * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == PrimePower{q, 2});
    CHECK(f.factors[1] == PrimePower{p, 1});

    // |star rhs| at n = 1100 has the order of n^8.
    const Integer q1100 = 1210000;
    const Integer big = q1100 * (q1100 - 1) * (q1100 - 4) * (q1100 + 5);
    const auto g = factorize(big);
    CHECK(g.product() == big);
    for (const auto& pp : g.factors)
        CHECK(is_prime(pp.prime));
}

TEST_CASE("factorize round-trips random values up to 1e9") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<unsigned long long> dist(1, 1000000000ULL);
    for (int i = 0; i < 300; ++i) {
        const unsigned long long m = dist(rng);
        const auto f = factorize(Integer(static_cast<unsigned long>(m)));
        CHECK(f.product() == static_cast<unsigned long>(m));
        CHECK(f.factors == trial_division(m));
    }
}

TEST_CASE("is_prime against known values") {
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(9973)));
    CHECK_FALSE(is_prime(Integer(3215031751UL)));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(Integer("18446744073709551557")));
    CHECK_FALSE(is_prime(Integer("3825123056546413051")));  // fools bases 2..23 except larger ones
}

TEST_CASE("signed_divisors") {
    CHECK(signed_divisors(Integer(4)) == std::vector<Integer>{-4, -2, -1, 1, 2, 4});
    CHECK(signed_divisors(Integer(1)) == std::vector<Integer>{-1, 1});
    CHECK(signed_divisors(Integer(-5040)).size() == 120);
    CHECK(signed_divisors(Integer(-5040)) == signed_divisors(Integer(5040)));
    CHECK_THROWS_AS(signed_divisors(Integer(0)), ArithError);
}

TEST_CASE("signed_divisors agrees with brute force for |m| <= 1e5") {
    // Full range is slow under a brute-force oracle; every value up to 3000 and
    // a stride through the rest.
    for (long m = 1; m <= 100000; m += (m < 3000 ? 1 : 97)) {
        CHECK(signed_divisors(Integer(m)) == brute_signed_divisors(m));
        if (m % 7 == 0)
            CHECK(signed_divisors(Integer(-m)) == brute_signed_divisors(-m));
    }
}

TEST_CASE("gen_binomial") {
    CHECK(gen_binomial(5, 2) == 10);
    CHECK(gen_binomial(-1, 3) == -1);
    CHECK(gen_binomial(1, 2) == 0);
    CHECK(gen_binomial(-2, 2) == 3);
    CHECK(gen_binomial(7, 0) == 1);
}

TEST_CASE("gen_binomial satisfies Pascal's rule") {
    for (long z = -20; z <= 20; ++z)
        for (unsigned long k = 1; k <= 20; ++k)
            CHECK(gen_binomial(z, k) == gen_binomial(z - 1, k - 1) + gen_binomial(z - 1, k));
}

TEST_CASE("reduced_fraction") {
    CHECK(reduced_fraction(Integer(2970), Integer(990)) == std::pair<Integer, Integer>{3, 1});
    CHECK(reduced_fraction(Integer(660), Integer(1320)) == std::pair<Integer, Integer>{1, 2});
    CHECK(reduced_fraction(Integer(0), Integer(7)) == std::pair<Integer, Integer>{0, 1});
    CHECK(reduced_fraction(Integer(3), Integer(-6)) == std::pair<Integer, Integer>{-1, 2});
    CHECK_THROWS_AS(reduced_fraction(Integer(1), Integer(0)), ArithError);
}
