// Exact integer and rational arithmetic shared by every other module.
//
// Integers and rationals are GMP values. Factorization uses trial division by
// small primes followed by Pollard rho (Brent variant) on the cofactor, with a
// deterministic Miller-Rabin test for primality.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace scrolls {

using Integer = mpz_class;
using Rational = mpq_class;

class ArithError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;  // primes strictly increasing

    Integer product() const;
    std::size_t divisor_count() const;
};

// Deterministic for m < 3.3e24; beyond that GMP's BPSW-backed test is used.
bool is_prime(const Integer& m);

Factorization factorize(const Integer& m);

// Every t with t | m, both signs, sorted ascending.
std::vector<Integer> signed_divisors(const Integer& m);
std::vector<Integer> positive_divisors(const Factorization& f);

// z(z-1)...(z-k+1)/k!, valid for negative z.
Integer gen_binomial(const Integer& z, unsigned long k);
inline Integer gen_binomial(long z, unsigned long k) { return gen_binomial(Integer(z), k); }

// (a, b) with a/b = num/den, gcd(|a|, b) = 1 and b > 0.
std::pair<Integer, Integer> reduced_fraction(const Integer& num, const Integer& den);

bool divides(const Integer& divisor, const Integer& value);
bool is_integer(const Rational& r);

// Euclidean residue in [0, |m|).
Integer mod_floor(const Integer& value, const Integer& m);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace scrolls
