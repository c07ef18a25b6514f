#pragma once

#include "signpat/inertia.hpp"
#include "signpat/polynomial.hpp"
#include "signpat/roots.hpp"
#include "signpat/sign_pattern.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace signpat {

/// Parameters x1..x9 of the 6x6 template
///
///     [  x1   1   0  0   0  0 ]
///     [ -x4 -x2   1  0   0  0 ]
///     [   0   0   0  1   0  0 ]
///     [   0   0   0  0   1  0 ]
///     [ -x6 -x5   0  0   0  1 ]
///     [  x7  x8  x9  0 -x3  0 ]
///
/// which conforms to T exactly when all nine are positive. x[0] is x1.
template <typename Scalar>
struct XParams {
    std::array<Scalar, 9> x;

    const Scalar& operator()(int i) const { return x[static_cast<std::size_t>(i - 1)]; }
    bool all_positive() const
    {
        for (const auto& v : x)
            if (!(v > 0))
                return false;
        return true;
    }
};

template <typename Scalar>
Matrix<Scalar> x_template_matrix(const XParams<Scalar>& p);

template <typename Scalar>
struct TBlockRealization {
    XParams<Scalar> params;
    Matrix<Scalar> matrix;
};

/// [[alpha, beta], [-gamma, -delta]] with char poly t^2 + p1 t + p0, using
/// alpha = |p1| + |p0| + 2, delta = alpha + p1, beta = 1, gamma = p0 + alpha delta.
template <typename Scalar>
Matrix<Scalar> realize_quadratic_D(const Scalar& p1, const Scalar& p0);

/// Completes x2, x4..x7 from the free parameters so that the template has
/// characteristic polynomial (t^2+b)(t^2+c)(t^2+d).
template <typename Scalar>
XParams<Scalar> complete_product_params(const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& x1,
                                        const Scalar& x3, const Scalar& x8, const Scalar& x9);

/// Realizes (t^2+b)(t^2+c)(t^2+d) for any real b, c, d with x3 = 1,
/// x1 = 1 + sqrt(max(0, 1 - (b+c+d))), x9 giving x5 >= 1 and x8 giving
/// x7 >= 1.
template <typename Scalar>
TBlockRealization<Scalar> realize_obs2(const Scalar& b, const Scalar& c, const Scalar& d);

/// Completes x2..x7 from x1, x8, x9 for a monic degree-6 target with
/// a5 != 0. x3 is a3/a5.
template <typename Scalar>
XParams<Scalar> complete_general_params(const Polynomial<Scalar>& target, const Scalar& x1, const Scalar& x8,
                                        const Scalar& x9);

/// True when a5 != 0 and a3/a5 > 0.
template <typename Scalar>
bool passes_T_gate(const Polynomial<Scalar>& target);

/// Necessary condition for a degree-6 target to be the char poly of some
/// matrix with pattern T: a3 = a5 = 0, or a3 and a5 nonzero with equal signs.
template <typename Scalar>
bool satisfies_T_necessary_condition(const Polynomial<Scalar>& target);

/// Realizes a monic degree-6 target with a3/a5 > 0. Free parameters:
/// x1 = 1 + |a5| + sqrt(max(0, a3/a5 - a4)), then x9 so that x5 >= 1, then x8
/// so that x6 >= 1 and x7 >= 1. Throws GateError outside the hypothesis.
template <typename Scalar>
TBlockRealization<Scalar> realize_obs3(const Polynomial<Scalar>& target);

enum class QuadraticClass { Zero, Positive, Negative };

std::string to_string(QuadraticClass c);

template <typename Scalar>
struct TripleSelection {
    std::array<Quadratic<Scalar>, 3> triple;
    std::vector<Quadratic<Scalar>> rest;
    QuadraticClass cls;
    /// Largest |a| snapped to zero while classifying.
    double snapped = 0.0;
};

/// Picks three nonnegative-b quadratics whose linear coefficients share a sign
/// class (|a| <= eps_zero counts as zero and is snapped to exactly 0). The
/// largest class wins; ties go to zero, then positive, then negative.
/// Needs at least eight quadratics with at most one negative b.
template <typename Scalar>
TripleSelection<Scalar> select_T_triple(std::vector<Quadratic<Scalar>> quads, const Scalar& eps_zero);

enum class BlockKind { T, D };
using BlockLayout = std::vector<BlockKind>;

/// T x t followed by D x d.
BlockLayout layout_V(int t, int d);
/// Concatenation of `copies` copies.
BlockLayout layout_repeat(const BlockLayout& unit, int copies);
SignPattern layout_pattern(const BlockLayout& layout);
std::size_t layout_order(const BlockLayout& layout);

/// Exact block targets, in layout order; their product is what the output
/// matrix realizes.
struct RealizationPlan {
    int t = 0;
    int d = 0;
    BlockLayout layout;
    std::vector<RationalPolynomial> block_targets;
    /// Class of each triple, one per T block in layout order.
    std::vector<QuadraticClass> triple_classes;
};

template <typename Scalar>
struct RealizationReport {
    Matrix<Scalar> matrix;
    SignPattern pattern;
    Polynomial<Scalar> target;
    /// relative_coefficient_error(char poly of matrix, target), computed exactly.
    double residual = 0.0;
    /// Bound on coefficient snapping applied while classifying quadratics.
    double perturbation = 0.0;
    RealizationPlan plan;
    /// Quadratic factors were recovered exactly (rational targets only).
    bool exact_factors = false;
};

/// Realizes f over an arbitrary arrangement of T and D blocks: one root
/// computation, one grouping into quadratics, then for each T block a
/// sign-homogeneous triple; the rest become D blocks. Needs at least five D
/// blocks and deg f == 6t + 2d.
RealizationReport<double> realize_layout(const FloatPolynomial& f, const BlockLayout& layout,
                                         double tol = kDefaultTolerance);
/// Rational targets: if the numerically found quadratics round to rationals
/// whose product is exactly f, the realization is exact; otherwise the
/// floating quadratics are used as exact dyadic rationals.
RealizationReport<Rational> realize_layout(const RationalPolynomial& f, const BlockLayout& layout,
                                           double tol = kDefaultTolerance);

inline RealizationReport<double> realize_V(const FloatPolynomial& f, int t, int d, double tol = kDefaultTolerance)
{
    return realize_layout(f, layout_V(t, d), tol);
}

inline RealizationReport<Rational> realize_V(const RationalPolynomial& f, int t, int d,
                                             double tol = kDefaultTolerance)
{
    return realize_layout(f, layout_V(t, d), tol);
}

struct InertiaTRealization {
    RefinedInertia mu;
    TBlockRealization<Rational> block;
    /// Multiplier N of the cubic factor; 0 on the (t^2+b)(t^2+c)(t^2+d) route.
    long multiplier = 0;
    RationalPolynomial target;
};

/// For nu with total 8, some mu <= nu of total 6 and a 6x6 matrix over T with
/// refined inertia mu.
InertiaTRealization realize_inertia_T(const RefinedInertia& nu);

struct InertiaTDRealization {
    InertiaTRealization t_part;
    RefinedInertia remainder;
    RationalPolynomial d_target;
    RationalMatrix matrix;
};

/// 8x8 matrix over diag(T, D) with refined inertia nu.
InertiaTDRealization realize_inertia_TD(const RefinedInertia& nu);

/// The degree-2 polynomial used for a D block of refined inertia rho
/// (total 2).
RationalPolynomial d_block_polynomial(const RefinedInertia& rho);

}  // namespace signpat
