// Relations among Chern classes of E and T_S forced by c_(n-1)(N) = d h^(n-1)
// and c_n(N) = 0, their closed forms, and the elimination of g1, g2 that
// leaves a single Diophantine equation in (q, d, e2) with q = n^2.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "scrolls/cohomring.hpp"
#include "scrolls/multipoly.hpp"

namespace scrolls {

class DerivationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// rel_i is homogeneous of base degree 1 (e1, g1); rel_ii and rel_iii are of
/// base degree 2. Each represents "class = 0" on the surface.
struct RelationSet {
    int n = 0;
    BaseClass rel_i;
    BaseClass rel_ii;
    BaseClass rel_iii;

    const BaseClass& get(int which) const;
};

// Extracts the relations from the normal bundle class. Throws DerivationError
// if any coefficient outside the three relation slots survives.
RelationSet derive_relations(int n);

// The relations as literal closed forms in n and d.
RelationSet closed_form_relations(int n);

using ClosedFormProvider = std::function<RelationSet(int)>;

struct CoefficientMismatch {
    Monomial monomial;
    int d_power;
    Rational derived;
    Rational expected;  // after rescaling
};

// Finds a rational lambda with derived == lambda * expected. Returns the first
// coefficient where that fails, or nullopt when they agree up to scale.
std::optional<CoefficientMismatch> compare_up_to_scale(const BaseClass& derived,
                                                       const BaseClass& expected);

struct CheckResult {
    bool passed = true;
    std::string detail;  // first failure, empty on success

    explicit operator bool() const { return passed; }
};

CheckResult verify_derivation(int n, const ClosedFormProvider& closed_form = closed_form_relations);

// Degree-k parts of (1+h)^(2n) s(E (x) O(-H)) against their closed form, for
// every k <= n.
CheckResult verify_ambient_closed_form(int n);

// rel_ii and rel_iii combined so that g1^2 - g2 cancels, compared with
// -3(q-4) e1^2 + 6(2d-q-2) e2 + n(q-4) e1 g1.
CheckResult verify_gamma2_elimination(int n);
BaseClass gamma2_eliminated_closed_form(int n);

struct Elimination {
    MultiPoly p_substituted;  // built by substituting e1^2 and e1 g1
    MultiPoly p_stated;       // literal form
    MultiPoly q_star;         // factored equation moved to one side
    bool identity_holds = false;  // q_star + (q+2)^2 p == 0 and both P agree
};

Elimination eliminate_gamma();

// {2(q+2)d - q(q+5)}{(q+2)(q-4)d - (q+2)^2 e2 + (q-1)(q-4)} + q(q-1)(q-4)(q+5)
MultiPoly star_polynomial();

// g2 solved from rel_iii with g1^2 = a^2 x / b^2, e1 g1 = -a x / b, x = d + e2.
Rational gamma2_solve(const Integer& n, const Integer& d, const Integer& e2, const Integer& a,
                      const Integer& b);

}  // namespace scrolls
