#include "scrolls/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "scrolls/relations.hpp"

namespace scrolls {

namespace {

constexpr std::array<std::pair<Classification, const char*>, 8> kClassNames = {{
    {Classification::KnownSegre, "KnownSegre"},
    {Classification::KnownBordiga, "KnownBordiga"},
    {Classification::KnownMukai, "KnownMukai"},
    {Classification::LowDegreeUnmatched, "LowDegreeUnmatched"},
    {Classification::Type1, "Type1"},
    {Classification::Type2, "Type2"},
    {Classification::Type3, "Type3"},
    {Classification::UnexpectedGeneralType, "UnexpectedGeneralType"},
}};

constexpr std::array<std::pair<Stage, const char*>, 7> kStageNames = {{
    {Stage::Raw, "raw"},
    {Stage::LowDegree, "low_degree"},
    {Stage::DivisibilityRejected, "divisibility_rejected"},
    {Stage::Gamma2Rejected, "gamma2_rejected"},
    {Stage::NoetherRejected, "noether_rejected"},
    {Stage::GenusRejected, "genus_rejected"},
    {Stage::Accepted, "accepted"},
}};

void require_n(int n, int min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(min) +
                                    ", got " + std::to_string(n));
}

struct ExpectedCase {
    int n;
    long d, e2, a, b, k_sq, euler, chi;
};

// Sporadic families of the conjecture.
constexpr ExpectedCase kType2{10, 595, 561, 3, 1, 10404, 12648, 1921};
constexpr ExpectedCase kType3{11, 231, 221, 1, 2, 113, 283, 33};

bool matches(const ExpectedCase& c, const CandidatePair& p, const SurfaceInvariants& inv) {
    return p.n == c.n && p.d == c.d && p.e2 == c.e2 && inv.a == Integer(c.a) && inv.b == Integer(c.b) &&
           inv.k_sq == Integer(c.k_sq) && inv.euler == Integer(c.euler) && inv.chi == Integer(c.chi);
}

bool matches_type1(const CandidatePair& p, const SurfaceInvariants& inv) {
    if (!type1_residue(p.n) || !inv.a || !inv.b || !inv.k_sq || !inv.euler || !inv.chi)
        return false;
    const Integer& q = p.q;
    return 6 * p.d == q * (q + 5) && 6 * p.e2 == (q - 4) * (q + 3) && *inv.a == p.n && *inv.b == 1 &&
           3 * *inv.k_sq == q * (q * q + 2 * q - 6) &&
           3 * *inv.euler == q * q * q + 8 * q * q + 24 * q + 36 &&
           18 * *inv.chi == q * q * q + 5 * q * q + 9 * q + 18;
}

}  // namespace

const char* to_string(Classification c) {
    for (const auto& [k, v] : kClassNames)
        if (k == c)
            return v;
    return "?";
}

std::optional<Classification> parse_classification(const std::string& s) {
    for (const auto& [k, v] : kClassNames)
        if (s == v)
            return k;
    return std::nullopt;
}

const char* to_string(Stage s) {
    for (const auto& [k, v] : kStageNames)
        if (k == s)
            return v;
    return "?";
}

std::optional<Stage> parse_stage(const std::string& s) {
    for (const auto& [k, v] : kStageNames)
        if (s == v)
            return k;
    return std::nullopt;
}

std::vector<CandidatePair> EnumReport::raw() const {
    std::vector<CandidatePair> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(r.pair);
    return out;
}

std::vector<CandidateRecord> EnumReport::filtered() const {
    std::vector<CandidateRecord> out;
    for (const auto& r : records)
        if (r.stage == Stage::Accepted)
            out.push_back(r);
    return out;
}

bool EnumReport::has(Classification c) const {
    return std::any_of(records.begin(), records.end(),
                       [c](const CandidateRecord& r) { return r.classification == c; });
}

Integer star_rhs(int n) {
    require_n(n, 3, "star_rhs");
    const Integer q = Integer(n) * n;
    return -q * (q - 1) * (q - 4) * (q + 5);
}

Integer star_residual(const Integer& q, const Integer& d, const Integer& e2) {
    const Integer lhs = (2 * (q + 2) * d - q * (q + 5)) *
                        ((q + 2) * (q - 4) * d - (q + 2) * (q + 2) * e2 + (q - 1) * (q - 4));
    return lhs + q * (q - 1) * (q - 4) * (q + 5);
}

std::vector<CandidatePair> star_solutions(int n) {
    require_n(n, 3, "star_solutions");
    const Integer q = Integer(n) * n;
    const Integer rhs = star_rhs(n);
    const Integer shift = q * (q + 5);
    const Integer d_den = 2 * (q + 2);
    const Integer e2_den = (q + 2) * (q + 2);
    const Integer d_coeff = (q + 2) * (q - 4);
    const Integer e2_const = (q - 1) * (q - 4);

    std::vector<CandidatePair> out;
    Integer num, d, rest, e2, quotient;
    for (const Integer& t : signed_divisors(rhs)) {
        num = t + shift;
        if (!divides(d_den, num))
            continue;
        mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), d_den.get_mpz_t());
        if (d < 1)
            continue;
        mpz_divexact(quotient.get_mpz_t(), rhs.get_mpz_t(), t.get_mpz_t());
        rest = d_coeff * d + e2_const - quotient;
        if (!divides(e2_den, rest))
            continue;
        mpz_divexact(e2.get_mpz_t(), rest.get_mpz_t(), e2_den.get_mpz_t());
        if (e2 < 1)
            continue;
        out.push_back({n, q, d, e2, t});
    }
    std::sort(out.begin(), out.end(), [](const CandidatePair& x, const CandidatePair& y) { return x.d < y.d; });
    // t = 2(q+2)d - q(q+5) determines d, so two divisors never give one pair.
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].d == out[i - 1].d)
            throw std::logic_error("star_solutions: duplicate d for n=" + std::to_string(n));
    return out;
}

std::optional<Classification> classify_known(int n, const Integer& d, const Integer& e2) {
    require_n(n, 4, "classify_known");
    const Integer N = n;
    if (2 * d == N * (N - 1) && 2 * e2 == (N - 1) * (N - 2))
        return Classification::KnownSegre;
    if (2 * d == N * (N + 1) && 2 * e2 == (N + 1) * (N + 2))
        return Classification::KnownBordiga;
    if (d == N * N && e2 == N * N - 4)
        return Classification::KnownMukai;
    return std::nullopt;
}

DivisibilityOutcome divisibility_filter(int n, const Integer& d, const Integer& e2) {
    const Integer N = n;
    const Integer q = N * N;
    auto [a, b] = reduced_fraction(6 * (d - q), N * (N + 1) * (N - 1));
    DivisibilityOutcome out{a, b, std::nullopt};
    const Integer x = d + e2;
    const Integer b_sq = b * b;
    if (divides(b_sq, x))
        out.a_sq = x / b_sq;
    return out;
}

NoetherOutcome noether_filter(int n, const Integer& d, const Integer& e2, const Integer& a,
                              const Integer& b) {
    NoetherOutcome out;
    const Integer x = d + e2;
    out.k_sq = a * a * (x / (b * b));
    out.gamma2 = gamma2_solve(Integer(n), d, e2, a, b);
    if (!is_integer(out.gamma2)) {
        out.status = NoetherOutcome::Status::NonIntegralGamma2;
        return out;
    }
    out.euler = out.gamma2.get_num();
    const Integer sum = out.k_sq + *out.euler;
    if (!divides(Integer(12), sum)) {
        out.status = NoetherOutcome::Status::NoetherFailure;
        return out;
    }
    out.chi = sum / 12;
    return out;
}

std::optional<Integer> sectional_genus(const Integer& d, const Integer& e2, const Integer& a,
                                       const Integer& b) {
    const Integer num = (a + b) * (d + e2);
    if (!divides(b, num))
        return std::nullopt;
    const Integer two_g_minus_2 = num / b;
    if (!divides(Integer(2), two_g_minus_2))
        return std::nullopt;
    return two_g_minus_2 / 2 + 1;
}

Integer castelnuovo_bound(const Integer& d, int n) {
    const Integer step = n - 1;
    Integer m, eps;
    mpz_fdiv_qr(m.get_mpz_t(), eps.get_mpz_t(), Integer(d - 1).get_mpz_t(), step.get_mpz_t());
    return m * (m - 1) / 2 * step + m * eps;
}

bool type1_residue(int n) {
    switch (n % 18) {
    case 0:
    case 2:
    case 6:
    case 12:
    case 16:
        return true;
    default:
        return false;
    }
}

Classification conjecture_classify(const CandidatePair& pair, const SurfaceInvariants& inv) {
    if (matches_type1(pair, inv))
        return Classification::Type1;
    if (matches(kType2, pair, inv))
        return Classification::Type2;
    if (matches(kType3, pair, inv))
        return Classification::Type3;
    return Classification::UnexpectedGeneralType;
}

EnumReport enumerate_n(int n, const EnumOptions& options) {
    require_n(n, 3, "enumerate_n");
    EnumReport report;
    report.n = n;
    auto& diag = report.diagnostics;

    for (const CandidatePair& pair : star_solutions(n)) {
        CandidateRecord rec{pair, Stage::Raw, {}, std::nullopt, false};
        ++diag.raw;
        if (options.raw_only || n == 3) {
            report.records.push_back(std::move(rec));
            continue;
        }

        auto& inv = rec.inv;
        inv.e1_sq = pair.d + pair.e2;
        if (pair.d <= pair.q) {
            rec.stage = Stage::LowDegree;
            ++diag.low_degree;
            if (auto known = classify_known(n, pair.d, pair.e2)) {
                rec.classification = known;
                ++diag.known;
            } else {
                rec.classification = Classification::LowDegreeUnmatched;
                ++diag.low_degree_unmatched;
            }
            report.records.push_back(std::move(rec));
            continue;
        }

        ++diag.general_type;
        const DivisibilityOutcome div = divisibility_filter(n, pair.d, pair.e2);
        inv.a = div.a;
        inv.b = div.b;
        if (!div.accepted()) {
            rec.stage = Stage::DivisibilityRejected;
            ++diag.rejected_divisibility;
            report.records.push_back(std::move(rec));
            continue;
        }
        inv.a_sq = div.a_sq;

        const NoetherOutcome noether = noether_filter(n, pair.d, pair.e2, div.a, div.b);
        inv.k_sq = noether.k_sq;
        inv.euler = noether.euler;
        if (noether.status == NoetherOutcome::Status::NonIntegralGamma2) {
            rec.stage = Stage::Gamma2Rejected;
            ++diag.rejected_gamma2;
            report.records.push_back(std::move(rec));
            continue;
        }
        if (noether.status == NoetherOutcome::Status::NoetherFailure) {
            rec.stage = Stage::NoetherRejected;
            ++diag.rejected_noether;
            report.records.push_back(std::move(rec));
            continue;
        }
        inv.chi = noether.chi;

        inv.genus = sectional_genus(pair.d, pair.e2, div.a, div.b);
        if (!inv.genus) {
            ++diag.genus_nonintegral;
            if (options.genus_filter) {
                rec.stage = Stage::GenusRejected;
                ++diag.rejected_genus;
                report.records.push_back(std::move(rec));
                continue;
            }
        }
        inv.cast_bound = castelnuovo_bound(pair.d, n);
        if (inv.genus && *inv.genus > *inv.cast_bound) {
            rec.castelnuovo_violation = true;
            ++diag.castelnuovo_violations;
        }

        rec.stage = Stage::Accepted;
        ++diag.accepted;
        rec.classification = conjecture_classify(pair, inv);
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace scrolls
