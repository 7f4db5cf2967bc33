#include "scrolls/cohomring.hpp"

#include <sstream>

namespace scrolls {

int degree(Monomial m) {
    switch (m) {
    case Monomial::One:
        return 0;
    case Monomial::E1:
    case Monomial::G1:
        return 1;
    default:
        return 2;
    }
}

const char* name(Monomial m) {
    switch (m) {
    case Monomial::One:
        return "1";
    case Monomial::E1:
        return "e1";
    case Monomial::G1:
        return "g1";
    case Monomial::E1E1:
        return "e1^2";
    case Monomial::E1G1:
        return "e1*g1";
    case Monomial::G1G1:
        return "g1^2";
    case Monomial::E2:
        return "e2";
    case Monomial::G2:
        return "g2";
    }
    return "?";
}

std::optional<Monomial> multiply(Monomial a, Monomial b) {
    if (degree(a) + degree(b) > 2)
        return std::nullopt;
    if (a == Monomial::One)
        return b;
    if (b == Monomial::One)
        return a;
    // both are degree 1
    if (a == Monomial::E1 && b == Monomial::E1)
        return Monomial::E1E1;
    if (a == Monomial::G1 && b == Monomial::G1)
        return Monomial::G1G1;
    return Monomial::E1G1;
}

// ---------------------------------------------------------------------------
// BaseClass

BaseClass BaseClass::monomial(Monomial m, const ScalarPoly& c) {
    BaseClass b;
    b[m] = c;
    return b;
}

bool BaseClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

BaseClass BaseClass::degree_part(int k) const {
    BaseClass out;
    for (Monomial m : kAllMonomials)
        if (degree(m) == k)
            out[m] = (*this)[m];
    return out;
}

BaseClass& BaseClass::operator+=(const BaseClass& o) {
    for (std::size_t i = 0; i < kMonomialCount; ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

BaseClass& BaseClass::operator-=(const BaseClass& o) {
    for (std::size_t i = 0; i < kMonomialCount; ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BaseClass& BaseClass::operator*=(const ScalarPoly& c) {
    for (auto& x : coeffs_)
        x = x * c;
    return *this;
}

BaseClass BaseClass::operator-() const {
    BaseClass out = *this;
    for (auto& x : out.coeffs_)
        x = -x;
    return out;
}

BaseClass operator*(const BaseClass& a, const BaseClass& b) {
    BaseClass out;
    for (Monomial ma : kAllMonomials) {
        if (a[ma].is_zero())
            continue;
        for (Monomial mb : kAllMonomials) {
            if (b[mb].is_zero())
                continue;
            if (auto m = multiply(ma, mb))
                out[*m] += a[ma] * b[mb];
        }
    }
    return out;
}

std::string BaseClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Monomial m : kAllMonomials) {
        const auto& c = (*this)[m];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c.to_string() << ")*" << name(m);
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// BundleClass

BundleClass::BundleClass(int n) : n_(n) {
    if (n < 3)
        throw RingError("BundleClass: dimension must be at least 3, got " + std::to_string(n));
    terms_.resize(static_cast<std::size_t>(n) + 1);
}

BundleClass BundleClass::h_power(int n, int k, const ScalarPoly& c) {
    BundleClass out(n);
    out.add_term(k, BaseClass(c));
    return out;
}

BundleClass BundleClass::from_base(int n, const BaseClass& b, int h_exponent) {
    BundleClass out(n);
    out.add_term(h_exponent, b);
    return out;
}

const BaseClass& BundleClass::term(int k) const {
    if (k < 0 || k > n_)
        throw RingError("BundleClass::term: h exponent " + std::to_string(k) + " out of range");
    return terms_[static_cast<std::size_t>(k)];
}

bool BundleClass::is_zero() const {
    for (const auto& t : terms_)
        if (!t.is_zero())
            return false;
    return true;
}

int BundleClass::max_h_exponent() const {
    for (int k = n_; k >= 0; --k)
        if (!terms_[static_cast<std::size_t>(k)].is_zero())
            return k;
    return -1;
}

void BundleClass::add_term(int k, const BaseClass& b) {
    if (k < 0)
        throw RingError("BundleClass::add_term: negative h exponent");
    if (k > n_)
        return;
    auto& slot = terms_[static_cast<std::size_t>(k)];
    for (Monomial m : kAllMonomials)
        if (k + degree(m) <= n_)
            slot[m] += b[m];
    reduced_ = false;
}

void BundleClass::check_same_n(const BundleClass& o) const {
    if (n_ != o.n_)
        throw RingError("BundleClass: mismatched dimensions " + std::to_string(n_) + " and " +
                        std::to_string(o.n_));
}

BundleClass& BundleClass::operator+=(const BundleClass& o) {
    check_same_n(o);
    for (int k = 0; k <= n_; ++k)
        terms_[static_cast<std::size_t>(k)] += o.terms_[static_cast<std::size_t>(k)];
    reduced_ = reduced_ && o.reduced_;
    return *this;
}

BundleClass& BundleClass::operator-=(const BundleClass& o) {
    check_same_n(o);
    for (int k = 0; k <= n_; ++k)
        terms_[static_cast<std::size_t>(k)] -= o.terms_[static_cast<std::size_t>(k)];
    reduced_ = reduced_ && o.reduced_;
    return *this;
}

BundleClass& BundleClass::operator*=(const ScalarPoly& c) {
    for (auto& t : terms_)
        t *= c;
    return *this;
}

BundleClass BundleClass::operator-() const {
    BundleClass out = *this;
    for (auto& t : out.terms_)
        t = -t;
    return out;
}

BundleClass mul(const BundleClass& x, const BundleClass& y) {
    x.check_same_n(y);
    BundleClass out(x.n_);
    for (int i = 0; i <= x.n_; ++i) {
        const auto& xi = x.terms_[static_cast<std::size_t>(i)];
        if (xi.is_zero())
            continue;
        for (int j = 0; i + j <= x.n_; ++j) {
            const auto& yj = y.terms_[static_cast<std::size_t>(j)];
            if (!yj.is_zero())
                out.add_term(i + j, xi * yj);
        }
    }
    return out;
}

BundleClass reduce_h(const BundleClass& x) {
    BundleClass out = x;
    const int n = x.n_;
    const BaseClass e1 = BaseClass::e1();
    const BaseClass e2 = BaseClass::e2();
    // h^n feeds h^(n-1), so go from the top down.
    for (int m = n; m >= n - 1; --m) {
        BaseClass t = out.terms_[static_cast<std::size_t>(m)];
        if (t.is_zero())
            continue;
        out.terms_[static_cast<std::size_t>(m)] = BaseClass();
        out.add_term(m - 1, t * e1);
        out.add_term(m - 2, -(t * e2));
    }
    out.reduced_ = true;
    return out;
}

BundleClass pow(const BundleClass& x, unsigned e) {
    BundleClass out = BundleClass::one(x.n());
    for (unsigned i = 0; i < e; ++i)
        out = mul(out, x);
    return out;
}

BundleClass component(const BundleClass& x, int k) {
    if (k < 0 || k > x.n())
        throw RingError("component: degree " + std::to_string(k) + " out of range");
    BundleClass out(x.n());
    for (int b = 0; b <= 2; ++b) {
        const int hk = k - b;
        if (hk >= 0)
            out.add_term(hk, x.term(hk).degree_part(b));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Segre classes and the normal bundle

const BaseClass& SegreClasses::operator[](int i) const {
    switch (i) {
    case 0:
        return s0;
    case 1:
        return s1;
    case 2:
        return s2;
    default:
        throw RingError("SegreClasses: index out of range");
    }
}

SegreClasses segre_from_chern(const BaseClass& c1, const BaseClass& c2) {
    if (!c1.is_homogeneous(1) || !c2.is_homogeneous(2))
        throw RingError("segre_from_chern: expected classes of degree 1 and 2");
    SegreClasses s{BaseClass(ScalarPoly(1)), c1, c1 * c1 - c2};
    // The dual bundle has Chern classes (-c1, c2).
    const BaseClass dual_total = BaseClass(ScalarPoly(1)) - c1 + c2;
    if (!(s.total() * dual_total == BaseClass(ScalarPoly(1))))
        throw std::logic_error("segre_from_chern: s(E) c(E^dual) != 1");
    return s;
}

BundleClass segre_of_twist(int i, int rank, const SegreClasses& segre, const BundleClass& ell) {
    const int n = ell.n();
    BundleClass out(n);
    const long top = static_cast<long>(rank) - 1 + i;
    for (int j = std::max(0, i - 2); j <= i; ++j) {
        const Rational c(gen_binomial(top, static_cast<unsigned long>(j)));
        if (c == 0)
            continue;
        BundleClass term = mul(BundleClass::from_base(n, segre[i - j]), pow(ell, static_cast<unsigned>(j)));
        out += term * ScalarPoly(c);
    }
    return out;
}

BaseClass segre_of_twist(int i, int rank, const SegreClasses& segre, const BaseClass& ell) {
    BaseClass out;
    const long top = static_cast<long>(rank) - 1 + i;
    BaseClass ell_pow(ScalarPoly(1));
    for (int j = 0; j <= i && j <= 2; ++j) {
        if (i - j <= 2) {
            const Rational c(gen_binomial(top, static_cast<unsigned long>(j)));
            out += (segre[i - j] * ell_pow) * ScalarPoly(c);
        }
        ell_pow = ell_pow * ell;
    }
    return out;
}

SegreClasses segre_of_e() { return segre_from_chern(BaseClass::e1(), BaseClass::e2()); }

BaseClass segre_of_cotangent() {
    // c1(Omega_S) = -g1, c2(Omega_S) = g2.
    return segre_from_chern(-BaseClass::g1(), BaseClass::g2()).total();
}

BundleClass ambient_twisted_product(int n) {
    BundleClass ambient(n);
    for (int k = 0; k <= n; ++k)
        ambient.add_term(k, BaseClass(ScalarPoly(Rational(gen_binomial(2L * n, k)))));

    const int rank = n - 1;
    const SegreClasses s = segre_of_e();
    const BundleClass minus_h = BundleClass::h_power(n, 1, ScalarPoly(-1));
    BundleClass twisted(n);
    for (int i = 0; i <= n; ++i)
        twisted += segre_of_twist(i, rank, s, minus_h);
    return mul(ambient, twisted);
}

BundleClass ambient_twisted_closed_form(int n, int k) {
    const int rank = n - 1;
    const SegreClasses s = segre_of_e();
    BundleClass out(n);
    for (int l = 0; l <= 2 && l <= k; ++l) {
        const Rational c(gen_binomial(2L * n - rank - l, static_cast<unsigned long>(k - l)));
        out.add_term(k - l, s[l] * ScalarPoly(c));
    }
    return out;
}

BundleClass normal_total_class(int n) {
    if (n < 3)
        throw RingError("normal_total_class: n must be at least 3, got " + std::to_string(n));
    return mul(ambient_twisted_product(n), BundleClass::from_base(n, segre_of_cotangent()));
}

bool check_binomial_identity(long m, long p, long c) {
    if (c < 0)
        return false;
    Integer lhs = 0;
    for (long a = 0; a <= c; ++a) {
        Integer t = gen_binomial(m - 1 + a, static_cast<unsigned long>(a)) *
                    gen_binomial(p, static_cast<unsigned long>(c - a));
        if (a % 2 == 1)
            t = -t;
        lhs += t;
    }
    return lhs == gen_binomial(p - m, static_cast<unsigned long>(c));
}

std::string pretty(const BundleClass& x) {
    std::ostringstream os;
    for (int k = 0; k <= x.n(); ++k) {
        for (Monomial m : kAllMonomials) {
            const auto& poly = x.term(k)[m];
            for (int b = 0; b <= poly.degree(); ++b) {
                const Rational& c = poly.coeff(b);
                if (c == 0)
                    continue;
                os << c.get_str() << " * d^" << b << " * h^" << k << " * " << name(m) << '\n';
            }
        }
    }
    return os.str();
}

}  // namespace scrolls
