#include "scrolls/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace scrolls {

namespace {

constexpr unsigned long kTrialBound = 10000;

// Miller-Rabin with the first 13 primes as bases is exact below this value.
const Integer& deterministic_limit() {
    static const Integer limit("3317044064679887385961981");
    return limit;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin(const Integer& m, unsigned long base) {
    Integer d = m - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer x;
    Integer a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    const Integer m1 = m - 1;
    if (x == 1 || x == m1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % m;
        if (x == m1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor of
// an odd composite m, trying successive polynomial constants.
Integer rho_factor(const Integer& m) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, g = 1, q = 1;
        const unsigned long batch = 128;
        unsigned long r = 1;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % m;
            unsigned long k = 0;
            do {
                ys = y;
                const unsigned long steps = std::min(batch, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % m;
                    Integer diff = x - y;
                    q = q * abs(diff) % m;
                }
                g = gcd(q, m);
                k += batch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == m) {
            // Batched gcd overshot; step back one at a time.
            do {
                ys = (ys * ys + c) % m;
                Integer diff = x - ys;
                g = gcd(abs(diff), m);
            } while (g == 1);
        }
        if (g != m)
            return g;
    }
}

void collect_factors(const Integer& m, std::map<Integer, unsigned>& out) {
    if (m == 1)
        return;
    if (is_prime(m)) {
        ++out[m];
        return;
    }
    const Integer f = rho_factor(m);
    collect_factors(f, out);
    collect_factors(m / f, out);
}

}  // namespace

Integer Factorization::product() const {
    Integer p = 1;
    for (const auto& pp : factors) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        p *= t;
    }
    return p;
}

std::size_t Factorization::divisor_count() const {
    std::size_t count = 1;
    for (const auto& pp : factors)
        count *= pp.exponent + 1;
    return count;
}

bool is_prime(const Integer& m) {
    if (m < 2)
        return false;
    for (unsigned long p : small_primes()) {
        if (m == p)
            return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p))
            return false;
        if (Integer(p) * p > m)
            return true;
    }
    if (m < deterministic_limit()) {
        static constexpr std::array<unsigned long, 13> bases = {2,  3,  5,  7,  11, 13, 17,
                                                                19, 23, 29, 31, 37, 41};
        return std::all_of(bases.begin(), bases.end(),
                           [&](unsigned long b) { return miller_rabin(m, b); });
    }
    return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

Factorization factorize(const Integer& m) {
    if (m <= 0)
        throw ArithError("factorize: argument must be positive, got " + to_string(m));

    Factorization result{m, {}};
    Integer rest = m;
    for (unsigned long p : small_primes()) {
        if (Integer(p) * p > rest)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            result.factors.push_back({Integer(p), e});
    }

    std::map<Integer, unsigned> large;
    collect_factors(rest, large);
    for (auto& [prime, e] : large) {
        // rest may itself be a small prime left over after the early break
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const PrimePower& pp) { return pp.prime == prime; });
        if (it != result.factors.end())
            it->exponent += e;
        else
            result.factors.push_back({prime, e});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

std::vector<Integer> positive_divisors(const Factorization& f) {
    std::vector<Integer> divs{Integer(1)};
    divs.reserve(f.divisor_count());
    for (const auto& pp : f.factors) {
        const std::size_t base = divs.size();
        Integer power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Integer> signed_divisors(const Integer& m) {
    if (m == 0)
        throw ArithError("signed_divisors: argument must be nonzero");
    const auto pos = positive_divisors(factorize(abs(m)));
    std::vector<Integer> out;
    out.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

Integer gen_binomial(const Integer& z, unsigned long k) {
    Integer num = 1;
    for (unsigned long i = 0; i < k; ++i)
        num *= z - i;
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), k);
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

std::pair<Integer, Integer> reduced_fraction(const Integer& num, const Integer& den) {
    if (den == 0)
        throw ArithError("reduced_fraction: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return {r.get_num(), r.get_den()};
}

bool divides(const Integer& divisor, const Integer& value) {
    if (divisor == 0)
        return value == 0;
    return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer mod_floor(const Integer& value, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace scrolls
