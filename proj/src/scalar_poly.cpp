#include "scrolls/scalar_poly.hpp"

#include <algorithm>
#include <sstream>

namespace scrolls {

ScalarPoly::ScalarPoly(const Rational& c) {
    if (c != 0)
        coeffs_.push_back(c);
}

ScalarPoly::ScalarPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

void ScalarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational ScalarPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[power];
}

Rational ScalarPoly::evaluate(const Rational& d) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * d + *it;
    return acc;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ScalarPoly& ScalarPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly out = *this;
    for (auto& x : out.coeffs_)
        x = -x;
    return out;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    ScalarPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
}

std::string ScalarPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
            if (i > 0)
                os << ' ';
        }
        if (i == 1)
            os << 'd';
        else if (i > 1)
            os << "d^" << i;
    }
    return os.str();
}

}  // namespace scrolls
