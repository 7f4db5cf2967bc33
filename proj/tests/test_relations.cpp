#include <doctest.h>

#include "scrolls/relations.hpp"

using namespace scrolls;

namespace {

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("derive_relations n = 4 gives (16 - d) e1 = 10 g1") {
    const RelationSet rels = derive_relations(4);
    CHECK(rels.rel_i[Monomial::E1] == ScalarPoly(16) - ScalarPoly::d());
    CHECK(rels.rel_i[Monomial::G1] == ScalarPoly(-10));
    CHECK(rels.rel_i.is_homogeneous(1));
    CHECK(rels.rel_ii.is_homogeneous(2));
    CHECK(rels.rel_iii.is_homogeneous(2));
}

TEST_CASE("derived relations have the expected shape for every n") {
    for (int n = 3; n <= 20; ++n) {
        const RelationSet rels = derive_relations(n);
        const long N = n;
        // rel_i is (n^2 - d) e1 - (n+1)n(n-1)/6 g1 without rescaling
        CHECK(rels.rel_i[Monomial::E1] == ScalarPoly(N * N) - ScalarPoly::d());
        CHECK(rels.rel_i[Monomial::G1] == ScalarPoly(frac(-(N + 1) * N * (N - 1), 6)));
        // d enters only with e1 and e2
        for (const BaseClass* r : {&rels.rel_i, &rels.rel_ii, &rels.rel_iii})
            for (Monomial m : {Monomial::G1, Monomial::E1G1, Monomial::G1G1, Monomial::G2})
                CHECK((*r)[m].degree() <= 0);
        CHECK(rels.rel_i[Monomial::E1].degree() <= 1);
        // rel_iii, up to scale, is 3 e1^2 - 2 e2 - n e1 g1 + (n^2-1)/6 (g1^2 - g2)
        const Rational s = rels.rel_iii[Monomial::E1E1].coeff(0) / 3;
        CHECK(rels.rel_iii[Monomial::E2] == ScalarPoly(-2 * s));
        CHECK(rels.rel_iii[Monomial::E1G1] == ScalarPoly(-N * s));
        CHECK(rels.rel_iii[Monomial::G1G1] == ScalarPoly(frac(N * N - 1, 6) * s));
    }
}

TEST_CASE("closed_form_relations") {
    const RelationSet c11 = closed_form_relations(11);
    CHECK(c11.rel_ii[Monomial::E1E1] == ScalarPoly(45));
    CHECK(c11.rel_ii[Monomial::E2] == ScalarPoly::d() - ScalarPoly(111));
    CHECK(c11.rel_ii[Monomial::E1G1] == ScalarPoly(-165));
    CHECK(c11.rel_ii[Monomial::G1G1] == ScalarPoly(495));
    CHECK(c11.rel_ii[Monomial::G2] == ScalarPoly(-495));

    // The n = 11 sporadic surface: e1^2 = 452, e2 = 221, e1 g1 = -226,
    // g1^2 = 113, g2 = 283, d = 231.
    const Rational val = 45 * 452 + (231 - 111) * 221 + 165 * 226 + 495 * (113 - 283);
    CHECK(val == 0);

    const RelationSet c4 = closed_form_relations(4);
    CHECK(c4.rel_ii[Monomial::E1E1] == ScalarPoly(3));
    CHECK(c4.rel_ii[Monomial::E2] == ScalarPoly::d() - ScalarPoly(13));
    CHECK(c4.rel_ii[Monomial::E1G1] == ScalarPoly(-4));
    CHECK(c4.rel_ii[Monomial::G1G1] == ScalarPoly(5));

    CHECK(closed_form_relations(3).rel_ii[Monomial::E1E1] == ScalarPoly(1));
}

TEST_CASE("verify_derivation for 3 <= n <= 40") {
    for (int n = 3; n <= 40; ++n) {
        const CheckResult r = verify_derivation(n);
        CHECK_MESSAGE(r.passed, r.detail);
        CHECK(verify_gamma2_elimination(n).passed);
    }
}

TEST_CASE("verify_derivation reports the first differing coefficient") {
    auto corrupt = [](int n) {
        RelationSet r = closed_form_relations(n);
        r.rel_ii[Monomial::E2] += ScalarPoly(1);
        return r;
    };
    const CheckResult r = verify_derivation(5, corrupt);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("relation ii") != std::string::npos);
    CHECK(r.detail.find("e2") != std::string::npos);
}

TEST_CASE("compare_up_to_scale") {
    const BaseClass a = BaseClass::e1() * ScalarPoly(2) - BaseClass::g1() * ScalarPoly(6);
    const BaseClass b = BaseClass::e1() - BaseClass::g1() * ScalarPoly(3);
    CHECK_FALSE(compare_up_to_scale(a, b).has_value());
    CHECK(compare_up_to_scale(a, BaseClass::e1()).has_value());
    CHECK(compare_up_to_scale(BaseClass(), b).has_value());
    CHECK_FALSE(compare_up_to_scale(BaseClass(), BaseClass()).has_value());
}

TEST_CASE("elimination identity Q + (q+2)^2 P == 0") {
    const Elimination e = eliminate_gamma();
    CHECK(e.p_substituted == e.p_stated);
    CHECK(e.identity_holds);
    const MultiPoly q = MultiPoly::q();
    CHECK((e.q_star + (q + 2) * (q + 2) * e.p_stated).is_zero());

    CHECK(e.q_star.evaluate(121, 231, 221) == 0);
    CHECK(e.q_star.evaluate(100, 595, 561) == 0);
    CHECK(e.q_star.evaluate(100, 596, 561) != 0);
    // The factored form at n = 11: 41580 * (-5148) = -121 * 120 * 117 * 126.
    CHECK(41580L * -5148L == -121L * 120 * 117 * 126);
}

TEST_CASE("gamma2_solve at the sporadic and smallest cases") {
    CHECK(gamma2_solve(11, 231, 221, 1, 2) == 283);
    CHECK(gamma2_solve(10, 595, 561, 3, 1) == 12648);
    // (q^3 + 8q^2 + 24q + 36)/3 at q = 36
    CHECK(gamma2_solve(6, 246, 208, 6, 1) == 19308);
    CHECK((46656 + 10368 + 864 + 36) / 3 == 19308);
}

TEST_CASE("gamma2_solve matches the type-1 closed form") {
    // Symbolically in q with a = n, b = 1, so n * a = q:
    //   g2 = q x + 6 (3x - 2 e2 + q x) / (q - 1),
    //   x = d + e2 = (q^2 + 2q - 6)/3, e2 = (q - 4)(q + 3)/6.
    const MultiPoly q = MultiPoly::q();
    const MultiPoly x = (q * q + q * Rational(2) - 6) * Rational(1, 3);
    const MultiPoly e2 = (q - 4) * (q + 3) * Rational(1, 6);
    const MultiPoly lhs = (q - 1) * q * x + MultiPoly(6) * (x * Rational(3) - e2 * Rational(2) + q * x);
    const MultiPoly rhs = (q - 1) * (q * q * q + q * q * Rational(8) + q * Rational(24) + 36) * Rational(1, 3);
    CHECK(lhs == rhs);

    // And numerically through gamma2_solve for sample n.
    for (long n : {6L, 12L, 16L, 18L, 20L, 24L, 30L, 90L, 360L, 1098L}) {
        const Integer Q = Integer(n) * n;
        const Integer d = Q * (Q + 5) / 6, e = (Q - 4) * (Q + 3) / 6;
        REQUIRE(6 * d == Q * (Q + 5));
        CHECK(gamma2_solve(n, d, e, n, 1) == Rational((Q * Q * Q + 8 * Q * Q + 24 * Q + 36) / 3));
    }
}

TEST_CASE("MultiPoly basics") {
    const MultiPoly q = MultiPoly::q(), d = MultiPoly::d();
    CHECK((q + d) * (q - d) == q * q - d * d);
    CHECK(pow(q + 1, 3).evaluate(2, 0, 0) == 27);
    CHECK((q * d * Rational(2) - MultiPoly::e2() * Rational(1, 3)).to_string() == "2 q d - 1/3 e2");
    CHECK(MultiPoly().to_string() == "0");
}
