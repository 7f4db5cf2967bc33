#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "scrolls/arith.hpp"

namespace scrolls {

/// Polynomial in the formal degree symbol d with exact rational coefficients.
/// Coefficients are stored low degree first and trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
class ScalarPoly {
public:
    ScalarPoly() = default;
    ScalarPoly(const Rational& c);  // NOLINT: constants convert implicitly
    ScalarPoly(long c) : ScalarPoly(Rational(c)) {}
    ScalarPoly(std::initializer_list<Rational> coeffs);

    static ScalarPoly d() { return ScalarPoly{Rational(0), Rational(1)}; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& d) const;

    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly& operator*=(const Rational& c);
    ScalarPoly operator-() const;

    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(ScalarPoly a, const Rational& c) { return a *= c; }
    friend ScalarPoly operator*(const Rational& c, ScalarPoly a) { return a *= c; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.coeffs_ == b.coeffs_; }

    // "3/2 - 5 d", or "0".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace scrolls
