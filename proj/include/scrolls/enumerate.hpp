// Integer solutions (d, e2) of the factored equation
//
//   {2(q+2)d - q(q+5)} {(q+2)(q-4)d - (q+2)^2 e2 + (q-1)(q-4)} = -q(q-1)(q-4)(q+5)
//
// for q = n^2, followed by the divisibility, Noether and genus checks on the
// d > q side and classification of everything that survives.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrolls/arith.hpp"

namespace scrolls {

struct CandidatePair {
    int n = 0;
    Integer q;
    Integer d;
    Integer e2;
    Integer t;  // 2(q+2)d - q(q+5), a divisor of star_rhs(n)

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

enum class Classification {
    KnownSegre,
    KnownBordiga,
    KnownMukai,
    LowDegreeUnmatched,
    Type1,
    Type2,
    Type3,
    UnexpectedGeneralType,
};

const char* to_string(Classification c);
std::optional<Classification> parse_classification(const std::string& s);

// Furthest point a candidate reached in the pipeline.
enum class Stage {
    Raw,                   // n = 3, or raw-only enumeration
    LowDegree,             // d <= q, matched against the known families
    DivisibilityRejected,  // b^2 does not divide d + e2
    Gamma2Rejected,        // Euler number not an integer
    NoetherRejected,       // K^2 + e not divisible by 12
    GenusRejected,         // only when the genus filter is switched on
    Accepted,
};

const char* to_string(Stage s);
std::optional<Stage> parse_stage(const std::string& s);

// Each field is set once the stage computing it has run.
struct SurfaceInvariants {
    std::optional<Integer> a, b;     // K_S ~ aA, e1 ~ bA, gcd(a, b) = 1
    std::optional<Integer> e1_sq;    // d + e2
    std::optional<Integer> a_sq;     // A^2 = (d + e2) / b^2
    std::optional<Integer> k_sq;     // K_S^2
    std::optional<Integer> euler;    // e(S) = c2(T_S)
    std::optional<Integer> chi;      // (K^2 + e) / 12
    std::optional<Integer> genus;    // sectional genus
    std::optional<Integer> cast_bound;
};

struct CandidateRecord {
    CandidatePair pair;
    Stage stage = Stage::Raw;
    SurfaceInvariants inv;
    std::optional<Classification> classification;
    bool castelnuovo_violation = false;
};

struct StageCounts {
    std::size_t raw = 0;
    std::size_t low_degree = 0;
    std::size_t known = 0;
    std::size_t low_degree_unmatched = 0;
    std::size_t general_type = 0;
    std::size_t rejected_divisibility = 0;
    std::size_t rejected_gamma2 = 0;
    std::size_t rejected_noether = 0;
    std::size_t rejected_genus = 0;
    std::size_t genus_nonintegral = 0;
    std::size_t castelnuovo_violations = 0;
    std::size_t accepted = 0;

    friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

struct EnumOptions {
    bool raw_only = false;
    bool genus_filter = false;  // reject on odd or non-integral 2g - 2
};

struct EnumReport {
    int n = 0;
    std::vector<CandidateRecord> records;  // one per raw solution, ascending d
    StageCounts diagnostics;

    std::vector<CandidatePair> raw() const;
    std::vector<CandidateRecord> filtered() const;
    bool has(Classification c) const;
};

// -q(q-1)(q-4)(q+5) with q = n^2.
Integer star_rhs(int n);
// Left side minus right side of the factored equation, evaluated directly.
Integer star_residual(const Integer& q, const Integer& d, const Integer& e2);

std::vector<CandidatePair> star_solutions(int n);

// Segre, Bordiga or Mukai family member, if (d, e2) matches one (n >= 4).
std::optional<Classification> classify_known(int n, const Integer& d, const Integer& e2);

struct DivisibilityOutcome {
    Integer a, b;
    std::optional<Integer> a_sq;  // set iff b^2 | d + e2

    bool accepted() const { return a_sq.has_value(); }
    Integer failing_divisor() const { return b * b; }
};

DivisibilityOutcome divisibility_filter(int n, const Integer& d, const Integer& e2);

struct NoetherOutcome {
    enum class Status { Accepted, NonIntegralGamma2, NoetherFailure };
    Status status = Status::Accepted;
    Rational gamma2;
    Integer k_sq;
    std::optional<Integer> euler;  // set iff gamma2 is integral
    std::optional<Integer> chi;    // set iff accepted

    bool accepted() const { return status == Status::Accepted; }
};

NoetherOutcome noether_filter(int n, const Integer& d, const Integer& e2, const Integer& a,
                              const Integer& b);

// g with 2g - 2 = (a + b)(d + e2)/b, or nullopt if that is odd or fractional.
std::optional<Integer> sectional_genus(const Integer& d, const Integer& e2, const Integer& a,
                                       const Integer& b);

// Castelnuovo's bound on the genus of a nondegenerate degree-d curve in P^n.
Integer castelnuovo_bound(const Integer& d, int n);

bool type1_residue(int n);  // n mod 18 in {0, 2, 6, 12, 16}

// Type1/2/3 when the candidate and its invariants match a conjectured family
// exactly, UnexpectedGeneralType otherwise.
Classification conjecture_classify(const CandidatePair& pair, const SurfaceInvariants& inv);

EnumReport enumerate_n(int n, const EnumOptions& options = {});

}  // namespace scrolls
