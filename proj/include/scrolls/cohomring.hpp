// Truncated cohomology ring of a projective bundle P(E) -> S over a surface.
//
// The base ring is generated by e1 = c1(E), g1 = c1(T_S) in degree 1 and
// e2 = c2(E), g2 = c2(T_S) in degree 2, free apart from the truncation at
// base degree 2. The bundle ring adjoins h = c1(O(1)) and is truncated at
// total degree n = dim P(E). The rank of E is r = n - 1, so the fibre relation
// reads h^(n-1) = h^(n-2) e1 - h^(n-3) e2.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scrolls/scalar_poly.hpp"

namespace scrolls {

enum class Monomial : std::uint8_t { One, E1, G1, E1E1, E1G1, G1G1, E2, G2 };

inline constexpr std::size_t kMonomialCount = 8;
inline constexpr std::array<Monomial, kMonomialCount> kAllMonomials = {
    Monomial::One,  Monomial::E1,   Monomial::G1, Monomial::E1E1,
    Monomial::E1G1, Monomial::G1G1, Monomial::E2, Monomial::G2};

int degree(Monomial m);
const char* name(Monomial m);
// Product of two basis monomials, or nullopt when it exceeds base degree 2.
std::optional<Monomial> multiply(Monomial a, Monomial b);

class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of the truncated base ring H(S): one d-polynomial coefficient per
/// basis monomial.
class BaseClass {
public:
    BaseClass() = default;
    BaseClass(const ScalarPoly& c) { coeffs_[0] = c; }  // NOLINT

    static BaseClass monomial(Monomial m, const ScalarPoly& c = ScalarPoly(1));
    static BaseClass e1() { return monomial(Monomial::E1); }
    static BaseClass g1() { return monomial(Monomial::G1); }
    static BaseClass e2() { return monomial(Monomial::E2); }
    static BaseClass g2() { return monomial(Monomial::G2); }

    const ScalarPoly& operator[](Monomial m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    ScalarPoly& operator[](Monomial m) { return coeffs_[static_cast<std::size_t>(m)]; }

    bool is_zero() const;
    BaseClass degree_part(int k) const;
    bool is_homogeneous(int k) const { return *this == degree_part(k); }

    BaseClass& operator+=(const BaseClass& o);
    BaseClass& operator-=(const BaseClass& o);
    BaseClass& operator*=(const ScalarPoly& c);
    BaseClass operator-() const;

    friend BaseClass operator+(BaseClass a, const BaseClass& b) { return a += b; }
    friend BaseClass operator-(BaseClass a, const BaseClass& b) { return a -= b; }
    friend BaseClass operator*(BaseClass a, const ScalarPoly& c) { return a *= c; }
    friend BaseClass operator*(const ScalarPoly& c, BaseClass a) { return a *= c; }
    friend BaseClass operator*(const BaseClass& a, const BaseClass& b);
    friend bool operator==(const BaseClass&, const BaseClass&) = default;

    std::string to_string() const;

private:
    std::array<ScalarPoly, kMonomialCount> coeffs_{};
};

/// Element of H(P(E)) written as sum_k h^k * base_k. Terms of total degree
/// above n are never stored.
class BundleClass {
public:
    explicit BundleClass(int n);

    static BundleClass one(int n) { return from_base(n, ScalarPoly(1)); }
    static BundleClass h_power(int n, int k, const ScalarPoly& c = ScalarPoly(1));
    static BundleClass from_base(int n, const BaseClass& b, int h_exponent = 0);

    int n() const { return n_; }
    bool reduced() const { return reduced_; }
    const BaseClass& term(int k) const;
    bool is_zero() const;
    int max_h_exponent() const;  // -1 for zero

    // Adds h^k * b, dropping monomials whose total degree exceeds n.
    void add_term(int k, const BaseClass& b);

    BundleClass& operator+=(const BundleClass& o);
    BundleClass& operator-=(const BundleClass& o);
    BundleClass& operator*=(const ScalarPoly& c);
    BundleClass operator-() const;

    friend BundleClass operator+(BundleClass a, const BundleClass& b) { return a += b; }
    friend BundleClass operator-(BundleClass a, const BundleClass& b) { return a -= b; }
    friend BundleClass operator*(BundleClass a, const ScalarPoly& c) { return a *= c; }
    friend BundleClass operator*(const ScalarPoly& c, BundleClass a) { return a *= c; }
    friend BundleClass operator*(const BundleClass& a, const BundleClass& b) { return mul(a, b); }
    // Compares values only; the reduced flag is bookkeeping.
    friend bool operator==(const BundleClass& a, const BundleClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    friend BundleClass mul(const BundleClass& x, const BundleClass& y);
    friend BundleClass reduce_h(const BundleClass& x);

private:
    void check_same_n(const BundleClass& o) const;

    int n_;
    std::vector<BaseClass> terms_;  // index = exponent of h
    bool reduced_ = false;
};

BundleClass pow(const BundleClass& x, unsigned e);

// Terms of total complex degree exactly k.
BundleClass component(const BundleClass& x, int k);

struct SegreClasses {
    BaseClass s0, s1, s2;

    BaseClass total() const { return s0 + s1 + s2; }
    const BaseClass& operator[](int i) const;
};

// Segre classes from c1, c2 of a bundle on the surface. Throws RingError if
// the inputs are not homogeneous of degree 1 and 2, and std::logic_error if
// s * c(dual) fails to be 1.
SegreClasses segre_from_chern(const BaseClass& c1, const BaseClass& c2);

// i-th Segre class of E (x) L for rank-r E given the Segre classes of E and
// ell = c1(L). ell may live on the base or on the bundle (e.g. ell = -h).
BundleClass segre_of_twist(int i, int rank, const SegreClasses& segre, const BundleClass& ell);
BaseClass segre_of_twist(int i, int rank, const SegreClasses& segre, const BaseClass& ell);

// Segre classes of E: (1, e1, e1^2 - e2).
SegreClasses segre_of_e();
// s(Omega_S) = c(T_S)^-1 = 1 - g1 + (g1^2 - g2).
BaseClass segre_of_cotangent();

// (1+h)^(2n) * s(E (x) O(-H)), the ambient factor times the inverse of
// c(E^dual (x) H), truncated at degree n.
BundleClass ambient_twisted_product(int n);
// Closed form of the degree-k part of ambient_twisted_product:
// sum_l C(2n - r - l, k - l) h^(k-l) s_l(E).
BundleClass ambient_twisted_closed_form(int n, int k);

// Total Chern class of the normal bundle of the scroll M in P^(2n-1),
// unreduced.
BundleClass normal_total_class(int n);

// sum_{a+b=c} C(m-1+a, a) (-1)^a C(p, b) == C(p-m, c).
bool check_binomial_identity(long m, long p, long c);

// One line per nonzero coefficient: "<c> * d^b * h^k * <monomial>", sorted by
// h exponent, monomial, then d power.
std::string pretty(const BundleClass& x);

}  // namespace scrolls
