#pragma once

#include "signpat/inertia.hpp"
#include "signpat/realizers.hpp"
#include "signpat/sign_pattern.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace signpat {

/// Outcome of checking the closed-form a3 / a5 coefficients on one matrix.
enum class SampleVerdict {
    Pass,
    NonConforming,  // sample rejected before any arithmetic
    IdentityMismatch,
    NilpotenceObstructionFailed,
};

struct IdentityCheckReport {
    SignPattern pattern;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool all_passed = true;
    std::optional<RationalMatrix> first_failure;
    /// Samples drawn with r22 = -r11 so that a5 vanishes.
    std::size_t trace_zero_samples = 0;
};

/// Closed forms for a realization R of T (include_r31 = false) or T'
/// (include_r31 = true), entries 1-based in the formulas:
///   a3 = -r12 r23 r31 + (r11 + r22) r56 r65,   a5 = -(r11 + r22).
Rational expected_a3(const RationalMatrix& r, bool include_r31);
Rational expected_a5(const RationalMatrix& r);

/// Checks one sample against `pattern` (T or T'). For T' it also checks that
/// a3 and a5 never vanish together.
SampleVerdict check_identity_sample(const RationalMatrix& r, const SignPattern& pattern);

/// A matrix conforming to `pattern` with nonzero entries drawn uniformly from
/// {k/l : 1 <= k, l <= 100} and signed by the pattern.
RationalMatrix random_conforming_matrix(const SignPattern& pattern, std::mt19937_64& rng);

IdentityCheckReport check_identity_T(std::size_t samples, std::uint64_t seed);
/// Every fourth sample is drawn with r22 = -r11 so the nilpotence obstruction
/// (a5 = 0 forces a3 = -r12 r23 r31 != 0) is exercised.
IdentityCheckReport check_identity_Tprime(std::size_t samples, std::uint64_t seed);

struct DivisorVerdict {
    RationalPolynomial divisor;
    bool violates = false;  // fails the T necessary condition
};

struct Obs12Report {
    RationalPolynomial f;
    std::vector<RationalPolynomial> factors;
    std::vector<DivisorVerdict> divisors;
    bool passed = false;
};

/// f = (t^2+t+1)(t^2-t+2)(t^2+1)(t^2-1): every degree-6 divisor built from its
/// irreducible real factors violates the T necessary condition.
Obs12Report check_obs12();

/// Recomputes conformance and the exact char-poly residual.
bool verify_realization(const RealizationReport<double>& rep, double tol);
bool verify_realization(const RealizationReport<Rational>& rep, double tol);

/// A random monic polynomial with non-leading coefficients uniform in
/// [-bound, bound].
FloatPolynomial random_monic(std::size_t degree, double bound, std::mt19937_64& rng);

struct TheoremConfig {
    std::uint64_t seed = 0;
    std::size_t identity_samples = 1000;
    std::size_t part1_targets = 20;
    std::size_t part3_targets = 3;
    double coefficient_bound = 5.0;
    double tol = kDefaultTolerance;
    double part1_residual = 1e-6;
    double part3_residual = 1e-5;
    double inertia_tol = 1e-6;
    bool parallel = true;
};

/// One named check inside a theorem part.
struct Evidence {
    std::string name;
    /// "exact" (certificate over all cases), "sampled" (randomized evidence
    /// for a universally quantified claim) or "construction".
    std::string kind;
    bool passed = false;
    std::string detail;
};

struct PartReport {
    std::string claim;
    std::vector<Evidence> evidence;
    bool passed() const;
};

struct TheoremReport {
    PartReport part1;
    PartReport part2;
    PartReport part3;
    bool passed() const { return part1.passed() && part2.passed() && part3.passed(); }
};

PartReport run_theorem_part1(const TheoremConfig& config);
PartReport run_theorem_part2(const TheoremConfig& config);
PartReport run_theorem_part3(const TheoremConfig& config);
TheoremReport run_theorem_suite(const TheoremConfig& config);

/// Nilpotent iff the characteristic polynomial is t^n.
bool is_nilpotent(const RationalMatrix& m);

}  // namespace signpat
