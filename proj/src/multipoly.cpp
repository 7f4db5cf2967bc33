#include "scrolls/multipoly.hpp"

#include <sstream>

namespace scrolls {

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0)
        terms_[{0, 0, 0}] = c;
}

MultiPoly MultiPoly::var(Var v) {
    MultiPoly p;
    Exponent e{0, 0, 0};
    e[v] = 1;
    p.terms_[e] = 1;
    return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational MultiPoly::evaluate(const Rational& q, const Rational& d, const Rational& e2) const {
    const std::array<Rational, 3> point{q, d, e2};
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < 3; ++v)
            for (unsigned k = 0; k < e[v]; ++k)
                t *= point[v];
        acc += t;
    }
    return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    return out *= Rational(-1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

MultiPoly pow(const MultiPoly& x, unsigned e) {
    MultiPoly out(1);
    for (unsigned i = 0; i < e; ++i)
        out = out * x;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    static constexpr const char* names[3] = {"q", "d", "e2"};
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
        bool need_space = false;
        if (mag != 1 || constant) {
            os << mag.get_str();
            need_space = true;
        }
        for (std::size_t v = 0; v < 3; ++v) {
            if (e[v] == 0)
                continue;
            if (need_space)
                os << ' ';
            os << names[v];
            if (e[v] > 1)
                os << '^' << e[v];
            need_space = true;
        }
    }
    return os.str();
}

}  // namespace scrolls
