#pragma once

#include "signpat/errors.hpp"
#include "signpat/matrix.hpp"
#include "signpat/rational.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace signpat {

/// Monic polynomial, dense, coefficients in ascending degree order
/// [c0, c1, ..., cn] with cn == 1.
///
/// The float backend accepts a leading coefficient within 1e-12 of one and
/// stores it as exactly 1; anything further off is rejected rather than
/// rescaled. The rational backend requires an exact 1.
template <typename Scalar>
class Polynomial {
public:
    static constexpr double kMonicTolerance = 1e-12;

    explicit Polynomial(std::vector<Scalar> coeffs);

    /// The constant polynomial 1.
    static Polynomial one() { return Polynomial(std::vector<Scalar>{Scalar(1)}); }
    /// prod (t - r) over the given real roots.
    static Polynomial from_real_roots(std::span<const Scalar> roots);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Coefficient of t^i, zero above the degree.
    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

    Scalar evaluate(const Scalar& x) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

extern template class Polynomial<Rational>;
extern template class Polynomial<double>;

template <typename Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q);

template <typename Scalar>
Polynomial<Scalar> poly_product(std::span<const Polynomial<Scalar>> factors);

/// Horner evaluation at a complex point.
std::complex<double> evaluate(const FloatPolynomial& p, std::complex<double> z);

/// max |c_i|
double max_abs_coeff(const FloatPolynomial& p);
double max_abs_coeff(const RationalPolynomial& p);

/// max_i |p_i - q_i| / max(1, max_i |q_i|); q is the reference. Degrees must
/// agree.
double relative_coefficient_error(const FloatPolynomial& p, const FloatPolynomial& reference);
double relative_coefficient_error(const RationalPolynomial& p, const RationalPolynomial& reference);

FloatPolynomial to_float(const RationalPolynomial& p);
RationalPolynomial to_rational(const FloatPolynomial& p);

/// All products of subsets of `factors` with degree exactly `degree`, in
/// subset-enumeration order (bitmask ascending).
template <typename Scalar>
std::vector<Polynomial<Scalar>> divisors_of_degree(std::span<const Polynomial<Scalar>> factors,
                                                   std::size_t degree);

/// Degree-6 divisors of the product of pairwise coprime factors.
template <typename Scalar>
std::vector<Polynomial<Scalar>> divisors_degree6(std::span<const Polynomial<Scalar>> factors)
{
    return divisors_of_degree(factors, 6);
}

/// det(tI - M) by the Faddeev-LeVerrier trace recursion. Exact on the
/// rational backend.
template <typename Scalar>
Polynomial<Scalar> char_poly(const Matrix<Scalar>& m);

/// Splits m along its exact-zero diagonal block structure and multiplies the
/// blocks' characteristic polynomials.
template <typename Scalar>
Polynomial<Scalar> char_poly_blockwise(const Matrix<Scalar>& m);

/// Characteristic polynomial of a float matrix computed exactly (entries are
/// read as the dyadic rationals they are), blockwise.
RationalPolynomial exact_char_poly(const FloatMatrix& m);

/// Companion matrix whose characteristic polynomial is p (degree >= 1).
template <typename Scalar>
Matrix<Scalar> companion_matrix(const Polynomial<Scalar>& p);

}  // namespace signpat
