#pragma once

#include <array>
#include <map>
#include <string>

#include "scrolls/arith.hpp"

namespace scrolls {

/// Exact-rational polynomial in the three formal variables q, d, e2.
/// Terms are kept in lexicographic exponent order (q, d, e2); zero
/// coefficients are never stored.
class MultiPoly {
public:
    enum Var : std::size_t { Q = 0, D = 1, E2 = 2 };
    using Exponent = std::array<unsigned, 3>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly var(Var v);
    static MultiPoly q() { return var(Q); }
    static MultiPoly d() { return var(D); }
    static MultiPoly e2() { return var(E2); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponent& e) const;

    Rational evaluate(const Rational& q, const Rational& d, const Rational& e2) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // e.g. "2 q^2 d - 1/3 e2"
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);

    std::map<Exponent, Rational> terms_;
};

MultiPoly pow(const MultiPoly& x, unsigned e);

}  // namespace scrolls
