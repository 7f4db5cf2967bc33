#include <doctest.h>

#include <fstream>
#include <sstream>

#include "scrolls/cohomring.hpp"

using namespace scrolls;

namespace {

BaseClass one() { return BaseClass(ScalarPoly(1)); }

BundleClass h(int n) { return BundleClass::h_power(n, 1); }

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Coefficients of (1+T)^e up to T^c for any integer e, by repeated
// multiplication or division of truncated power series.
std::vector<Integer> binomial_series(long e, long c) {
    std::vector<Integer> s(static_cast<std::size_t>(c) + 1, Integer(0));
    s[0] = 1;
    const long steps = e < 0 ? -e : e;
    for (long i = 0; i < steps; ++i) {
        if (e > 0) {
            for (long k = c; k >= 1; --k)
                s[k] += s[k - 1];
        } else {
            for (long k = 1; k <= c; ++k)
                s[k] -= s[k - 1];
        }
    }
    return s;
}

}  // namespace

TEST_CASE("ScalarPoly arithmetic") {
    const ScalarPoly d = ScalarPoly::d();
    const ScalarPoly p = d * d - ScalarPoly(4);
    CHECK(p == (d - ScalarPoly(2)) * (d + ScalarPoly(2)));
    CHECK(p.evaluate(5) == 21);
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "-4 + d^2");
    CHECK((ScalarPoly(Rational(1, 2)) - d * Rational(3)).to_string() == "1/2 - 3 d");
}

TEST_CASE("monomial products truncate at base degree 2") {
    CHECK(multiply(Monomial::E1, Monomial::G1) == Monomial::E1G1);
    CHECK(multiply(Monomial::G1, Monomial::E1) == Monomial::E1G1);
    CHECK(multiply(Monomial::One, Monomial::E2) == Monomial::E2);
    CHECK_FALSE(multiply(Monomial::E2, Monomial::E1).has_value());
    CHECK_FALSE(multiply(Monomial::E1G1, Monomial::G1).has_value());
    CHECK((BaseClass::e2() * BaseClass::e1()).is_zero());
}

TEST_CASE("segre_from_chern") {
    const auto s = segre_from_chern(BaseClass::e1(), BaseClass::e2());
    CHECK(s.s0 == one());
    CHECK(s.s1 == BaseClass::e1());
    CHECK(s.s2 == BaseClass::monomial(Monomial::E1E1) - BaseClass::e2());

    const auto trivial = segre_from_chern(BaseClass(), BaseClass());
    CHECK(trivial.total() == one());

    const auto g = segre_from_chern(BaseClass::g1(), BaseClass::g2());
    CHECK(g.s2 == BaseClass::monomial(Monomial::G1G1) - BaseClass::g2());

    // s(Omega_S) is the inverse of c(T_S) = 1 + g1 + g2.
    const BaseClass s_omega = segre_of_cotangent();
    CHECK(s_omega == one() - BaseClass::g1() + BaseClass::monomial(Monomial::G1G1) - BaseClass::g2());
    CHECK(s_omega * (one() + BaseClass::g1() + BaseClass::g2()) == one());

    CHECK_THROWS_AS(segre_from_chern(BaseClass::e2(), BaseClass::e2()), RingError);
}

TEST_CASE("segre_of_twist on the base") {
    const auto s = segre_of_e();
    const int r = 5;
    for (int i = 0; i <= 2; ++i)
        CHECK(segre_of_twist(i, r, s, BaseClass()) == s[i]);

    const BaseClass ell = BaseClass::g1();
    CHECK(segre_of_twist(1, r, s, ell) == s.s1 + ell * ScalarPoly(r));
    const BaseClass want2 = s.s2 + (s.s1 * ell) * ScalarPoly(r + 1) + (ell * ell) * ScalarPoly((r + 1) * r / 2);
    CHECK(segre_of_twist(2, r, s, ell) == want2);
}

TEST_CASE("segre_of_twist by -h matches pushforward expansion") {
    // s_i(E(-H)) = sum_j C(r-1+i, j) s_(i-j) (-h)^j; spot check i = 3, r = 4.
    const int n = 5, r = 4;
    const auto s = segre_of_e();
    const BundleClass got = segre_of_twist(3, r, s, -h(n));
    BundleClass want(n);
    want.add_term(2, s.s1 * ScalarPoly(Rational(gen_binomial(6, 2))));
    want.add_term(1, s.s2 * ScalarPoly(-Rational(gen_binomial(6, 1))));
    want.add_term(3, one() * ScalarPoly(-Rational(gen_binomial(6, 3))));
    CHECK(got == want);
}

TEST_CASE("mul and truncation") {
    const int n = 5;
    const BundleClass x = BundleClass::from_base(n, BaseClass::e1() + BaseClass::g2(), 2);
    CHECK(mul(x, BundleClass::one(n)) == x);
    CHECK(mul(BundleClass::h_power(n, n - 1), h(n)) == BundleClass::h_power(n, n));
    CHECK(mul(BundleClass::from_base(n, BaseClass::e2()), BundleClass::from_base(n, BaseClass::e1())).is_zero());
    // total degree n + 1 is dropped
    CHECK(mul(BundleClass::h_power(n, n), h(n)).is_zero());
    CHECK(mul(BundleClass::h_power(n, n - 1), BundleClass::from_base(n, BaseClass::e2())).is_zero());
    CHECK_THROWS_AS(mul(BundleClass::one(4), BundleClass::one(5)), RingError);
    CHECK_THROWS_AS(BundleClass(2), RingError);
}

TEST_CASE("reduce_h applies the fibre relation") {
    for (int n : {3, 4, 7}) {
        const BundleClass e1 = BundleClass::from_base(n, BaseClass::e1());
        const BundleClass e2 = BundleClass::from_base(n, BaseClass::e2());
        const BundleClass hn1 = reduce_h(BundleClass::h_power(n, n - 1));
        CHECK(hn1 == BundleClass::h_power(n, n - 2) * e1 - BundleClass::h_power(n, n - 3) * e2);
        CHECK(hn1.reduced());
        CHECK(hn1.max_h_exponent() <= n - 2);

        const BundleClass hn = reduce_h(BundleClass::h_power(n, n));
        const BaseClass e1sq_minus_e2 = BaseClass::monomial(Monomial::E1E1) - BaseClass::e2();
        CHECK(hn == BundleClass::from_base(n, e1sq_minus_e2, n - 2));

        const BundleClass low = BundleClass::from_base(n, BaseClass::g1(), n - 2) + BundleClass::h_power(n, 1);
        CHECK(reduce_h(low) == low);
    }
}

TEST_CASE("component") {
    const int n = 4;
    const BundleClass x = BundleClass::one(n) + h(n) + BundleClass::from_base(n, BaseClass::e1(), 1);
    CHECK(component(x, 0) == BundleClass::one(n));
    CHECK(component(x, 1) == h(n));
    CHECK(component(x, 2) == BundleClass::from_base(n, BaseClass::e1(), 1));
    BundleClass sum(n);
    for (int k = 0; k <= n; ++k)
        sum += component(x, k);
    CHECK(sum == x);
    CHECK_THROWS_AS(component(x, n + 1), RingError);
}

TEST_CASE("normal_total_class") {
    for (int n = 3; n <= 9; ++n) {
        const BundleClass c = normal_total_class(n);
        CHECK(component(c, 0) == BundleClass::one(n));
    }
    CHECK_THROWS(normal_total_class(2));
}

TEST_CASE("c_(n-1)(N) before reduction has the six-term form") {
    for (int n = 3; n <= 12; ++n) {
        const BundleClass got = component(normal_total_class(n), n - 1);
        auto C = [](long top, long k) { return ScalarPoly(Rational(gen_binomial(top, static_cast<unsigned long>(k)))); };
        BundleClass want(n);
        want.add_term(n - 1, one() * C(n + 1, n - 1));
        want.add_term(n - 2, BaseClass::e1() * C(n, n - 2));
        want.add_term(n - 3, (BaseClass::monomial(Monomial::E1E1) - BaseClass::e2()) * C(n - 1, n - 3));
        want.add_term(n - 2, BaseClass::g1() * -C(n + 1, n - 2));
        want.add_term(n - 3, BaseClass::monomial(Monomial::E1G1) * -C(n, n - 3));
        want.add_term(n - 3, (BaseClass::monomial(Monomial::G1G1) - BaseClass::g2()) * C(n + 1, n - 3));
        CHECK_MESSAGE(got == want, "n=" << n);
    }
}

TEST_CASE("golden pretty print of c_2(N) for n = 3") {
    CHECK(pretty(component(normal_total_class(3), 2)) == read_golden("c2_normal_n3.txt"));
}

TEST_CASE("ambient product matches closed form for 3 <= n <= 40") {
    for (int n = 3; n <= 40; ++n) {
        const BundleClass product = ambient_twisted_product(n);
        for (int k = 0; k <= n; ++k)
            CHECK_MESSAGE(component(product, k) == ambient_twisted_closed_form(n, k), "n=" << n << " k=" << k);
    }
}

TEST_CASE("check_binomial_identity") {
    CHECK(check_binomial_identity(2, 3, 2));
    CHECK(check_binomial_identity(1, 5, 0));
    CHECK(check_binomial_identity(3, 1, 2));
    CHECK(gen_binomial(-2, 2) == 3);
}

TEST_CASE("binomial identity grid against power series oracle") {
    for (long m = 1; m <= 15; ++m) {
        for (long p = 0; p <= 25; ++p) {
            const auto neg = binomial_series(-m, 20);
            const auto pos = binomial_series(p, 20);
            const auto both = binomial_series(p - m, 20);
            for (long c = 0; c <= 20; ++c) {
                Integer conv = 0;
                for (long a = 0; a <= c; ++a)
                    conv += neg[a] * pos[c - a];
                REQUIRE(conv == both[c]);
                CHECK(check_binomial_identity(m, p, c));
                CHECK(gen_binomial(p - m, static_cast<unsigned long>(c)) == both[c]);
            }
        }
    }
}
