#include "scrolls/relations.hpp"

#include <sstream>

namespace scrolls {

namespace {

const char* relation_name(int which) {
    switch (which) {
    case 1:
        return "i";
    case 2:
        return "ii";
    default:
        return "iii";
    }
}

int max_d_power(const BaseClass& a, const BaseClass& b) {
    int top = -1;
    for (Monomial m : kAllMonomials)
        top = std::max({top, a[m].degree(), b[m].degree()});
    return top;
}

std::string describe(const CoefficientMismatch& mm) {
    std::ostringstream os;
    os << "coefficient of d^" << mm.d_power << " * " << name(mm.monomial) << ": derived "
       << mm.derived.get_str() << ", closed form " << mm.expected.get_str();
    return os.str();
}

Rational r(long num, long den = 1) {
    Rational x(num, den);
    x.canonicalize();
    return x;
}

}  // namespace

const BaseClass& RelationSet::get(int which) const {
    switch (which) {
    case 1:
        return rel_i;
    case 2:
        return rel_ii;
    case 3:
        return rel_iii;
    default:
        throw std::out_of_range("RelationSet::get: relation index must be 1..3");
    }
}

RelationSet derive_relations(int n) {
    if (n < 3)
        throw RingError("derive_relations: n must be at least 3");

    const BundleClass total = normal_total_class(n);
    const ScalarPoly d = ScalarPoly::d();

    // c_(n-1)(N) - d h^(n-1), written in the free basis 1, h, ..., h^(n-2).
    BundleClass codim = reduce_h(component(total, n - 1));
    codim -= reduce_h(BundleClass::h_power(n, n - 1, d));
    // c_n(N)
    const BundleClass top = reduce_h(component(total, n));

    RelationSet rels;
    rels.n = n;
    rels.rel_i = codim.term(n - 2).degree_part(1);
    rels.rel_ii = codim.term(n - 3).degree_part(2);
    rels.rel_iii = top.term(n - 2).degree_part(2);

    BundleClass rest = codim;
    rest -= BundleClass::from_base(n, rels.rel_i, n - 2);
    rest -= BundleClass::from_base(n, rels.rel_ii, n - 3);
    if (!rest.is_zero())
        throw DerivationError("derive_relations: stray terms in c_(n-1)(N) at n=" + std::to_string(n) +
                              ":\n" + pretty(rest));
    rest = top;
    rest -= BundleClass::from_base(n, rels.rel_iii, n - 2);
    if (!rest.is_zero())
        throw DerivationError("derive_relations: stray terms in c_n(N) at n=" + std::to_string(n) +
                              ":\n" + pretty(rest));
    return rels;
}

RelationSet closed_form_relations(int n) {
    if (n < 3)
        throw RingError("closed_form_relations: n must be at least 3");
    const long N = n;
    const ScalarPoly d = ScalarPoly::d();
    RelationSet rels;
    rels.n = n;

    // (n^2 - d) e1 - (n+1)n(n-1)/6 g1
    rels.rel_i[Monomial::E1] = ScalarPoly(r(N * N)) - d;
    rels.rel_i[Monomial::G1] = ScalarPoly(r(-(N + 1) * N * (N - 1), 6));

    // (n-1)(n-2)/2 e1^2 + (d - n^2 + n - 1) e2 - n(n-1)(n-2)/6 e1 g1
    //   + (n+1)n(n-1)(n-2)/24 (g1^2 - g2)
    const Rational quartic = r((N + 1) * N * (N - 1) * (N - 2), 24);
    rels.rel_ii[Monomial::E1E1] = ScalarPoly(r((N - 1) * (N - 2), 2));
    rels.rel_ii[Monomial::E2] = d + ScalarPoly(r(-N * N + N - 1));
    rels.rel_ii[Monomial::E1G1] = ScalarPoly(r(-N * (N - 1) * (N - 2), 6));
    rels.rel_ii[Monomial::G1G1] = ScalarPoly(quartic);
    rels.rel_ii[Monomial::G2] = ScalarPoly(-quartic);

    // 3 e1^2 - 2 e2 - n e1 g1 + (n+1)(n-1)/6 (g1^2 - g2)
    const Rational quad = r((N + 1) * (N - 1), 6);
    rels.rel_iii[Monomial::E1E1] = ScalarPoly(3);
    rels.rel_iii[Monomial::E2] = ScalarPoly(-2);
    rels.rel_iii[Monomial::E1G1] = ScalarPoly(-N);
    rels.rel_iii[Monomial::G1G1] = ScalarPoly(quad);
    rels.rel_iii[Monomial::G2] = ScalarPoly(-quad);
    return rels;
}

std::optional<CoefficientMismatch> compare_up_to_scale(const BaseClass& derived,
                                                       const BaseClass& expected) {
    const int top = max_d_power(derived, expected);
    std::optional<Rational> scale;
    for (Monomial m : kAllMonomials) {
        for (int b = 0; b <= top && !scale; ++b) {
            const Rational e = expected[m].coeff(b);
            if (e != 0)
                scale = derived[m].coeff(b) / e;
        }
    }
    const Rational lambda = scale.value_or(Rational(0));
    for (Monomial m : kAllMonomials) {
        for (int b = 0; b <= top; ++b) {
            const Rational want = lambda * expected[m].coeff(b);
            const Rational got = derived[m].coeff(b);
            if (got != want || (lambda == 0 && expected[m].coeff(b) != 0))
                return CoefficientMismatch{m, b, got, want};
        }
    }
    return std::nullopt;
}

CheckResult verify_derivation(int n, const ClosedFormProvider& closed_form) {
    RelationSet derived;
    try {
        derived = derive_relations(n);
    } catch (const DerivationError& e) {
        return {false, e.what()};
    }
    const RelationSet stated = closed_form(n);
    for (int which = 1; which <= 3; ++which) {
        if (auto mm = compare_up_to_scale(derived.get(which), stated.get(which))) {
            std::ostringstream os;
            os << "n=" << n << " relation " << relation_name(which) << ": " << describe(*mm);
            return {false, os.str()};
        }
    }
    return {};
}

CheckResult verify_ambient_closed_form(int n) {
    const BundleClass product = ambient_twisted_product(n);
    for (int k = 0; k <= n; ++k) {
        const BundleClass lhs = component(product, k);
        const BundleClass rhs = ambient_twisted_closed_form(n, k);
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "n=" << n << " ambient product degree " << k << ":\n"
               << pretty(lhs) << "vs closed form\n"
               << pretty(rhs);
            return {false, os.str()};
        }
    }
    return {};
}

BaseClass gamma2_eliminated_closed_form(int n) {
    const long N = n;
    const long q = N * N;
    const ScalarPoly d = ScalarPoly::d();
    BaseClass out;
    out[Monomial::E1E1] = ScalarPoly(r(-3 * (q - 4)));
    out[Monomial::E2] = d * r(12) + ScalarPoly(r(-6 * (q + 2)));
    out[Monomial::E1G1] = ScalarPoly(r(N * (q - 4)));
    return out;
}

CheckResult verify_gamma2_elimination(int n) {
    RelationSet rels;
    try {
        rels = derive_relations(n);
    } catch (const DerivationError& e) {
        return {false, e.what()};
    }
    // Both relations carry g1^2 and g2 only through (g1^2 - g2), with
    // d-free coefficients.
    const ScalarPoly c_ii = rels.rel_ii[Monomial::G2];
    const ScalarPoly c_iii = rels.rel_iii[Monomial::G2];
    const BaseClass combined = rels.rel_ii * c_iii - rels.rel_iii * c_ii;
    if (!combined[Monomial::G1G1].is_zero() || !combined[Monomial::G2].is_zero())
        return {false, "n=" + std::to_string(n) + " gamma elimination leaves g1^2 or g2: " +
                           combined.to_string()};
    if (auto mm = compare_up_to_scale(combined, gamma2_eliminated_closed_form(n)))
        return {false, "n=" + std::to_string(n) + " gamma elimination: " + describe(*mm)};
    return {};
}

MultiPoly star_polynomial() {
    const MultiPoly q = MultiPoly::q(), d = MultiPoly::d(), e2 = MultiPoly::e2();
    const MultiPoly divisor = MultiPoly(2) * (q + 2) * d - q * (q + 5);
    const MultiPoly cofactor =
        (q + 2) * (q - 4) * d - (q + 2) * (q + 2) * e2 + (q - 1) * (q - 4);
    return divisor * cofactor + q * (q - 1) * (q - 4) * (q + 5);
}

Elimination eliminate_gamma() {
    const MultiPoly q = MultiPoly::q(), d = MultiPoly::d(), e2 = MultiPoly::e2();

    // (q - 1) times the g2-free relation
    //   -3(q-4) e1^2 + 6(2d-q-2) e2 + (q-4) [n e1 g1],
    // with e1^2 = d + e2 (degree of M) and, from rel_i multiplied by e1,
    //   n (q-1) e1 g1 = 6 (q-d) e1^2.
    const MultiPoly e1_sq = d + e2;
    const MultiPoly n_q1_e1g1 = MultiPoly(6) * (q - d) * e1_sq;
    MultiPoly substituted = MultiPoly(-3) * (q - 4) * (q - 1) * e1_sq +
                            MultiPoly(6) * (MultiPoly(2) * d - q - 2) * (q - 1) * e2 +
                            (q - 4) * n_q1_e1g1;
    substituted *= Rational(1, 3);

    Elimination out;
    out.p_substituted = substituted;
    out.p_stated = (q - 4) * (q + 1 - MultiPoly(2) * d) * (d + e2) +
                   MultiPoly(2) * (q - 1) * (MultiPoly(2) * d - q - 2) * e2;
    out.q_star = star_polynomial();
    const MultiPoly residual = out.q_star + (q + 2) * (q + 2) * out.p_stated;
    out.identity_holds = out.p_substituted == out.p_stated && residual.is_zero();
    return out;
}

Rational gamma2_solve(const Integer& n, const Integer& d, const Integer& e2, const Integer& a,
                      const Integer& b) {
    if (b < 1)
        throw ArithError("gamma2_solve: b must be positive");
    const Integer x = d + e2;
    Rational g1_sq(a * a * x, b * b);
    g1_sq.canonicalize();
    Rational e1_g1(-a * x, b);
    e1_g1.canonicalize();
    Rational correction = Rational(3 * x - 2 * e2) - Rational(n) * e1_g1;
    correction *= Rational(6);
    correction /= Rational(n * n - 1);
    return g1_sq + correction;
}

}  // namespace scrolls
