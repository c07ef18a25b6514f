#include "signpat/inertia.hpp"

#include <algorithm>
#include <cmath>

namespace signpat {

std::string to_string(const RefinedInertia& nu)
{
    return "(" + std::to_string(nu.n_plus) + "," + std::to_string(nu.n_minus) + "," +
           std::to_string(nu.n_zero) + "," + std::to_string(nu.n_imag) + ")";
}

RefinedInertia classify_roots(const RootMultiset& roots, double tol)
{
    RefinedInertia nu;
    int imaginary_roots = 0;
    for (const auto& z : roots.roots) {
        if (std::abs(z) <= tol)
            ++nu.n_zero;
        else if (std::fabs(z.real()) <= tol)
            ++imaginary_roots;
        else if (z.real() > 0.0)
            ++nu.n_plus;
        else
            ++nu.n_minus;
    }
    nu.n_imag = imaginary_roots / 2;
    nu.n_zero += imaginary_roots % 2;  // unreachable for conjugate-closed input
    return nu;
}

namespace {

// Largest diagonal block for which the exact characteristic polynomial of a
// float matrix is computed; beyond it the trace recursion runs in doubles.
constexpr std::size_t kExactBlockLimit = 12;

RefinedInertia inertia_from_exact(const RationalPolynomial& cp, double tol)
{
    std::size_t zeros = 0;
    while (zeros < cp.degree() && cp[zeros] == 0)
        ++zeros;
    RefinedInertia nu;
    nu.n_zero = static_cast<int>(zeros);
    if (zeros == cp.degree())
        return nu;
    const auto coeffs = cp.coeffs();
    std::vector<Rational> rest(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end());
    return nu + classify_roots(find_roots(to_float(RationalPolynomial(std::move(rest))), tol), tol);
}

}  // namespace

RefinedInertia refined_inertia_of(const FloatMatrix& m, double tol)
{
    if (!(tol > 0.0))
        throw PreconditionError("refined_inertia_of needs tol > 0");
    const auto sizes = diagonal_block_sizes(m);
    if (*std::max_element(sizes.begin(), sizes.end()) <= kExactBlockLimit)
        return inertia_from_exact(exact_char_poly(m), tol);
    return classify_roots(find_roots(char_poly_blockwise(m), tol), tol);
}

RefinedInertia refined_inertia_of(const RationalMatrix& m, double tol)
{
    if (!(tol > 0.0))
        throw PreconditionError("refined_inertia_of needs tol > 0");
    return inertia_from_exact(char_poly_blockwise(m), tol);
}

std::vector<RefinedInertia> all_refined_inertias(int order)
{
    std::vector<RefinedInertia> out;
    for (int ni = 0; 2 * ni <= order; ++ni)
        for (int np = 0; np + 2 * ni <= order; ++np)
            for (int nm = 0; np + nm + 2 * ni <= order; ++nm)
                out.push_back({np, nm, order - np - nm - 2 * ni, ni});
    return out;
}

}  // namespace signpat
