#pragma once

#include "signpat/polynomial.hpp"

#include <complex>
#include <vector>

namespace signpat {

inline constexpr double kDefaultTolerance = 1e-9;

/// Roots with multiplicity (repeated entries). Closed under conjugation: every
/// nonreal root is stored next to its exact conjugate.
struct RootMultiset {
    std::vector<std::complex<double>> roots;
    double tolerance = kDefaultTolerance;
    /// max root_residual over the returned roots (0 for hand-built sets).
    double residual = 0.0;
    /// Aberth sweeps used.
    int iterations = 0;
};

/// Monic quadratic t^2 + a t + b.
template <typename Scalar>
struct Quadratic {
    Scalar a;
    Scalar b;

    friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

template <typename Scalar>
Polynomial<Scalar> to_polynomial(const Quadratic<Scalar>& q)
{
    return Polynomial<Scalar>(std::vector<Scalar>{q.b, q.a, Scalar(1)});
}

/// |p(z)| / max(max|c_i|, sum |c_i| |z|^i). Equals |p(z)| / max|c_i| for
/// roots inside the unit disc; beyond it the denominator tracks the rounding
/// floor of evaluating p at z.
double root_residual(const FloatPolynomial& p, std::complex<double> z);

struct AberthOptions {
    int max_iterations = 500;
    /// Converged once every update satisfies |step| <= step_tolerance * radius.
    double step_tolerance = 1e-13;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration.
///
/// Starts from n points on the circle of radius 1 + max|c_i| (angles offset
/// off the real axis). After iterating, numerically coincident roots are
/// merged to their cluster mean, nonreal roots are paired with their nearest
/// conjugate and averaged, and roots within tol of the real axis (or of zero)
/// are snapped there.
///
/// Throws RootFindingError when some root_residual exceeds tol.
RootMultiset find_roots(const FloatPolynomial& p, double tol = kDefaultTolerance,
                        const AberthOptions& options = {});

/// Groups a conjugate-closed multiset into real monic quadratics.
///
/// Conjugate pairs z, conj(z) come first as t^2 - 2Re(z) t + |z|^2. Real
/// roots follow, paired sign-homogeneously (positives by descending value,
/// then negatives by ascending value); a leftover positive and a leftover
/// negative are paired with zeros when available, otherwise with each other.
/// At most one output quadratic has b < 0.
///
/// Throws ConjugacyError for odd size or conjugates further apart than
/// sqrt(tol) * (1 + |z|).
std::vector<Quadratic<double>> roots_to_quadratics(const RootMultiset& r);

/// Number of quadratics with negative constant term.
template <typename Scalar>
std::size_t count_negative_b(const std::vector<Quadratic<Scalar>>& quads)
{
    std::size_t n = 0;
    for (const auto& q : quads)
        if (q.b < 0)
            ++n;
    return n;
}

}  // namespace signpat
