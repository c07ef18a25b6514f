#include "signpat/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace signpat {

namespace {

void normalize_leading(std::vector<Rational>& coeffs)
{
    if (coeffs.back() != 1)
        throw PreconditionError("rational polynomial must be monic (leading coefficient exactly 1)");
}

void normalize_leading(std::vector<double>& coeffs)
{
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw PreconditionError("polynomial coefficients must be finite");
    if (std::fabs(coeffs.back() - 1.0) > FloatPolynomial::kMonicTolerance)
        throw PreconditionError("polynomial must be monic: leading coefficient " +
                                std::to_string(coeffs.back()) + " is not 1");
    coeffs.back() = 1.0;
}

// Row-major dense product of two n x n matrices held as flat vectors.
template <typename Scalar>
std::vector<Scalar> mat_mul(std::span<const Scalar> a, const std::vector<Scalar>& b, std::size_t n)
{
    std::vector<Scalar> c(n * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a[i * n + k];
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

}  // namespace

template <typename Scalar>
Polynomial<Scalar>::Polynomial(std::vector<Scalar> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw PreconditionError("polynomial needs at least one coefficient");
    normalize_leading(coeffs_);
}

template <typename Scalar>
Polynomial<Scalar> Polynomial<Scalar>::from_real_roots(std::span<const Scalar> roots)
{
    std::vector<Scalar> c{Scalar(1)};
    for (const auto& r : roots) {
        std::vector<Scalar> next(c.size() + 1, Scalar(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

template <typename Scalar>
Scalar Polynomial<Scalar>::evaluate(const Scalar& x) const
{
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

template class Polynomial<Rational>;
template class Polynomial<double>;

template <typename Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q)
{
    std::vector<Scalar> c(p.degree() + q.degree() + 1, Scalar(0));
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        if (p[i] == 0)
            continue;
        for (std::size_t j = 0; j <= q.degree(); ++j)
            c[i + j] += p[i] * q[j];
    }
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> poly_product(std::span<const Polynomial<Scalar>> factors)
{
    auto acc = Polynomial<Scalar>::one();
    for (const auto& f : factors)
        acc = poly_mul(acc, f);
    return acc;
}

std::complex<double> evaluate(const FloatPolynomial& p, std::complex<double> z)
{
    std::complex<double> acc(0.0);
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double max_abs_coeff(const FloatPolynomial& p)
{
    double m = 0.0;
    for (double c : p.coeffs())
        m = std::max(m, std::fabs(c));
    return m;
}

double max_abs_coeff(const RationalPolynomial& p)
{
    Rational m(0);
    for (const auto& c : p.coeffs())
        if (abs(c) > m)
            m = abs(c);
    return m.get_d();
}

double relative_coefficient_error(const FloatPolynomial& p, const FloatPolynomial& reference)
{
    if (p.degree() != reference.degree())
        throw PreconditionError("relative_coefficient_error: degree mismatch");
    double err = 0.0;
    for (std::size_t i = 0; i <= p.degree(); ++i)
        err = std::max(err, std::fabs(p[i] - reference[i]));
    return err / std::max(1.0, max_abs_coeff(reference));
}

double relative_coefficient_error(const RationalPolynomial& p, const RationalPolynomial& reference)
{
    if (p.degree() != reference.degree())
        throw PreconditionError("relative_coefficient_error: degree mismatch");
    Rational err(0);
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        Rational diff = abs(Rational(p[i] - reference[i]));
        if (diff > err)
            err = diff;
    }
    return err.get_d() / std::max(1.0, max_abs_coeff(reference));
}

FloatPolynomial to_float(const RationalPolynomial& p)
{
    std::vector<double> c;
    c.reserve(p.degree() + 1);
    for (const auto& x : p.coeffs())
        c.push_back(x.get_d());
    return FloatPolynomial(std::move(c));
}

RationalPolynomial to_rational(const FloatPolynomial& p)
{
    std::vector<Rational> c;
    c.reserve(p.degree() + 1);
    for (double x : p.coeffs())
        c.push_back(rational_from_double(x));
    return RationalPolynomial(std::move(c));
}

template <typename Scalar>
std::vector<Polynomial<Scalar>> divisors_of_degree(std::span<const Polynomial<Scalar>> factors,
                                                   std::size_t degree)
{
    if (factors.size() >= 8 * sizeof(unsigned long))
        throw PreconditionError("divisors_of_degree: too many factors to enumerate");
    std::vector<Polynomial<Scalar>> out;
    const unsigned long subsets = 1UL << factors.size();
    for (unsigned long mask = 1; mask < subsets; ++mask) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask & (1UL << i))
                total += factors[i].degree();
        if (total != degree)
            continue;
        auto prod = Polynomial<Scalar>::one();
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask & (1UL << i))
                prod = poly_mul(prod, factors[i]);
        out.push_back(std::move(prod));
    }
    return out;
}

template <typename Scalar>
Polynomial<Scalar> char_poly(const Matrix<Scalar>& m)
{
    const std::size_t n = m.order();
    // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    std::vector<Scalar> am(n * n, Scalar(0));  // A * M_{k-1}; M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Scalar> mk = am;
        for (std::size_t i = 0; i < n; ++i)
            mk[i * n + i] += c[n - k + 1];
        am = mat_mul<Scalar>(m.entries(), mk, n);
        Scalar trace(0);
        for (std::size_t i = 0; i < n; ++i)
            trace += am[i * n + i];
        c[n - k] = -trace / Scalar(static_cast<long>(k));
    }
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> char_poly_blockwise(const Matrix<Scalar>& m)
{
    auto acc = Polynomial<Scalar>::one();
    std::size_t offset = 0;
    for (std::size_t size : diagonal_block_sizes(m)) {
        acc = poly_mul(acc, char_poly(principal_block(m, offset, size)));
        offset += size;
    }
    return acc;
}

RationalPolynomial exact_char_poly(const FloatMatrix& m)
{
    return char_poly_blockwise(to_rational(m));
}

template <typename Scalar>
Matrix<Scalar> companion_matrix(const Polynomial<Scalar>& p)
{
    const std::size_t n = p.degree();
    if (n == 0)
        throw PreconditionError("companion matrix needs degree >= 1");
    std::vector<Scalar> e(n * n, Scalar(0));
    for (std::size_t i = 1; i < n; ++i)
        e[i * n + (i - 1)] = Scalar(1);
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + (n - 1)] = -p[i];
    return Matrix<Scalar>(n, std::move(e));
}

#define SIGNPAT_INSTANTIATE(S)                                                                     \
    template Polynomial<S> poly_mul(const Polynomial<S>&, const Polynomial<S>&);                   \
    template Polynomial<S> poly_product(std::span<const Polynomial<S>>);                           \
    template std::vector<Polynomial<S>> divisors_of_degree(std::span<const Polynomial<S>>,         \
                                                           std::size_t);                           \
    template Polynomial<S> char_poly(const Matrix<S>&);                                            \
    template Polynomial<S> char_poly_blockwise(const Matrix<S>&);                                  \
    template Matrix<S> companion_matrix(const Polynomial<S>&);

SIGNPAT_INSTANTIATE(Rational)
SIGNPAT_INSTANTIATE(double)

#undef SIGNPAT_INSTANTIATE

}  // namespace signpat
