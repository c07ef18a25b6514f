#pragma once

#include "signpat/matrix.hpp"
#include "signpat/roots.hpp"

#include <array>
#include <string>

namespace signpat {

/// (n+, n-, n0, ni): eigenvalues with positive real part, negative real part,
/// zero, and nonzero purely imaginary ones counted in conjugate pairs.
struct RefinedInertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    int n_imag = 0;

    /// n+ + n- + n0 + 2 ni, the matrix order it describes.
    int total() const noexcept { return n_plus + n_minus + n_zero + 2 * n_imag; }

    bool nonnegative() const noexcept { return n_plus >= 0 && n_minus >= 0 && n_zero >= 0 && n_imag >= 0; }

    /// Componentwise <=.
    bool fits_within(const RefinedInertia& other) const noexcept
    {
        return n_plus <= other.n_plus && n_minus <= other.n_minus && n_zero <= other.n_zero &&
               n_imag <= other.n_imag;
    }

    friend RefinedInertia operator+(RefinedInertia a, const RefinedInertia& b)
    {
        return {a.n_plus + b.n_plus, a.n_minus + b.n_minus, a.n_zero + b.n_zero, a.n_imag + b.n_imag};
    }
    friend RefinedInertia operator-(RefinedInertia a, const RefinedInertia& b)
    {
        return {a.n_plus - b.n_plus, a.n_minus - b.n_minus, a.n_zero - b.n_zero, a.n_imag - b.n_imag};
    }
    friend bool operator==(const RefinedInertia&, const RefinedInertia&) = default;
};

std::string to_string(const RefinedInertia& nu);

/// Classifies roots: |z| <= tol is zero; |Re| <= tol with |Im| > tol is
/// imaginary (two roots make one pair); otherwise by the sign of Re.
RefinedInertia classify_roots(const RootMultiset& roots, double tol);

/// Refined inertia of a float matrix via char_poly and find_roots.
RefinedInertia refined_inertia_of(const FloatMatrix& m, double tol = kDefaultTolerance);

/// Rational matrices use the exact characteristic polynomial; the exact
/// multiplicity of the eigenvalue 0 is stripped before root finding.
RefinedInertia refined_inertia_of(const RationalMatrix& m, double tol = kDefaultTolerance);

/// Every (n+, n-, n0, ni) with n+ + n- + n0 + 2 ni == order.
std::vector<RefinedInertia> all_refined_inertias(int order);

}  // namespace signpat
