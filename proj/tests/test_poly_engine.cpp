#include "signpat/errors.hpp"
#include "signpat/inertia.hpp"
#include "signpat/polynomial.hpp"
#include "signpat/realizers.hpp"
#include "signpat/roots.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace signpat;

namespace {

RationalPolynomial rpoly(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c)
        r.emplace_back(v);
    return RationalPolynomial(r);
}

// The polynomial used for the divisor certificate and its factors.
std::vector<RationalPolynomial> certificate_factors()
{
    return {rpoly({1, 1, 1}), rpoly({2, -1, 1}), rpoly({1, 0, 1}), rpoly({-1, 1}), rpoly({1, 1})};
}

bool contains_root(const RootMultiset& r, std::complex<double> z, double tol)
{
    for (const auto& w : r.roots)
        if (std::abs(w - z) <= tol)
            return true;
    return false;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("monic normalization")
{
    CHECK(FloatPolynomial({2.0, 1.0 + 1e-13}).coeffs()[1] == 1.0);
    CHECK_THROWS_AS(FloatPolynomial({2.0, 1.1}), PreconditionError);
    CHECK_THROWS_AS(FloatPolynomial(std::vector<double>{}), PreconditionError);
    CHECK_THROWS_AS(RationalPolynomial({Rational(1), Rational(2)}), PreconditionError);
    CHECK_THROWS_AS(FloatPolynomial({std::nan(""), 1.0}), PreconditionError);
}

TEST_CASE("poly_mul examples")
{
    CHECK(poly_mul(rpoly({1, 0, 1}), rpoly({-1, 0, 1})) == rpoly({-1, 0, 0, 0, 1}));
    CHECK(poly_mul(rpoly({1, 1, 1}), rpoly({2, -1, 1})) == rpoly({2, 1, 2, 0, 1}));
    CHECK(poly_mul(rpoly({1, 1, 1}), rpoly({2, -1, 1})) == oracle::schoolbook(rpoly({1, 1, 1}), rpoly({2, -1, 1})));
    CHECK(poly_mul(rpoly({3, -2, 1}), RationalPolynomial::one()) == rpoly({3, -2, 1}));
}

TEST_CASE("evaluation and from_real_roots")
{
    const std::vector<Rational> roots{Rational(1), Rational(-2), Rational(1, 2)};
    const auto p = RationalPolynomial::from_real_roots(roots);
    for (const auto& r : roots)
        CHECK(p.evaluate(r) == 0);
    CHECK(p.evaluate(Rational(0)) == 1);
    CHECK(std::abs(evaluate(to_float(rpoly({1, 0, 1})), {0.0, 1.0})) == 0.0);
}

TEST_CASE("relative coefficient error")
{
    CHECK(relative_coefficient_error(rpoly({1, 2, 1}), rpoly({1, 2, 1})) == 0.0);
    CHECK(relative_coefficient_error(rpoly({5, 0, 1}), rpoly({3, 0, 1})) == doctest::Approx(2.0 / 3.0));
    // Small references are measured absolutely.
    CHECK(relative_coefficient_error(FloatPolynomial({0.25, 1.0}), FloatPolynomial({0.0, 1.0})) ==
          doctest::Approx(0.25));
    CHECK_THROWS_AS(relative_coefficient_error(rpoly({1, 1}), rpoly({1, 0, 1})), PreconditionError);
}

TEST_CASE("char_poly of small matrices")
{
    CHECK(char_poly(RationalMatrix::identity(2)) == rpoly({1, -2, 1}));
    const auto cubic = rpoly({5, -2, 0, 1});
    CHECK(char_poly(companion_matrix(cubic)) == cubic);
    CHECK(char_poly(companion_matrix(to_float(cubic))) == to_float(cubic));
    CHECK(char_poly(RationalMatrix(1, {Rational(-7, 3)})) == RationalPolynomial({Rational(7, 3), Rational(1)}));
}

TEST_CASE("char_poly of a T realization of (t^2+1)(t^2+2)(t^2+3) matches the cofactor oracle")
{
    const auto block = realize_obs2(Rational(1), Rational(2), Rational(3));
    const auto expected = poly_mul(poly_mul(rpoly({1, 0, 1}), rpoly({2, 0, 1})), rpoly({3, 0, 1}));
    CHECK(char_poly(block.matrix) == expected);
    CHECK(oracle::cofactor_char_poly(block.matrix) == expected);
    CHECK(expected == rpoly({6, 0, 11, 0, 6, 0, 1}));
}

TEST_CASE("blockwise char poly agrees with the direct one")
{
    const std::vector<RationalMatrix> blocks{companion_matrix(rpoly({1, 2, 3, 1})), RationalMatrix(2, {1, 2, -3, 4}),
                                             RationalMatrix(1, {Rational(9)})};
    const auto m = block_diag(blocks);
    CHECK(char_poly_blockwise(m) == char_poly(m));
    CHECK(exact_char_poly(to_float(m)) == char_poly(m));
}

TEST_CASE("exact char poly reads floats as dyadic rationals")
{
    const FloatMatrix m(2, {0.1, 1.0, 0.0, 0.2});
    const auto p = exact_char_poly(m);
    CHECK(p[0] == rational_from_double(0.1) * rational_from_double(0.2));
    CHECK(p[1] == -(rational_from_double(0.1) + rational_from_double(0.2)));
}

TEST_CASE("degree-6 divisors of the certificate polynomial")
{
    const auto factors = certificate_factors();
    const auto divisors = divisors_degree6<Rational>(factors);
    REQUIRE(divisors.size() == 4);
    const auto product = poly_product<Rational>(factors);
    for (const auto& d : divisors) {
        CHECK(d.degree() == 6);
        CHECK(d[6] == 1);
    }
    // Each divisor times its complementary factors rebuilds f.
    CHECK(product.degree() == 8);
    const auto e = divisors_degree6<Rational>(std::vector<RationalPolynomial>{rpoly({1, 0, 1})});
    CHECK(e.empty());
}

}  // TEST_SUITE

TEST_SUITE("roots") {

TEST_CASE("quadratics with known roots")
{
    const auto i = find_roots(FloatPolynomial({1.0, 0.0, 1.0}));
    REQUIRE(i.roots.size() == 2);
    CHECK(contains_root(i, {0.0, 1.0}, 1e-12));
    CHECK(contains_root(i, {0.0, -1.0}, 1e-12));
    CHECK(i.residual <= kDefaultTolerance);

    const auto pm = find_roots(FloatPolynomial({-1.0, 0.0, 1.0}));
    CHECK(contains_root(pm, {1.0, 0.0}, 1e-12));
    CHECK(contains_root(pm, {-1.0, 0.0}, 1e-12));
    for (const auto& z : pm.roots)
        CHECK(z.imag() == 0.0);
}

TEST_CASE("the eight roots of the certificate polynomial")
{
    const auto f = to_float(poly_product<Rational>(certificate_factors()));
    const auto r = find_roots(f);
    REQUIRE(r.roots.size() == 8);
    const double s3 = std::sqrt(3.0) / 2.0;
    const double s7 = std::sqrt(7.0) / 2.0;
    for (std::complex<double> z : {std::complex<double>(-0.5, s3), {-0.5, -s3}, {0.5, s7}, {0.5, -s7}, {0.0, 1.0},
                                   {0.0, -1.0}, {1.0, 0.0}, {-1.0, 0.0}})
        CHECK(contains_root(r, z, 1e-9));
    // Conjugate pairs are stored exactly conjugate.
    for (std::size_t k = 0; k + 1 < r.roots.size(); ++k)
        if (r.roots[k].imag() > 0.0)
            CHECK(r.roots[k + 1] == std::conj(r.roots[k]));
}

TEST_CASE("multiple roots are merged")
{
    auto p = FloatPolynomial::one();
    for (int k = 0; k < 6; ++k)
        p = poly_mul(p, FloatPolynomial({1.0, 1.0}));
    const auto r = find_roots(p, 1e-6);
    for (const auto& z : r.roots)
        CHECK(std::abs(z + 1.0) <= 1e-9);
}

TEST_CASE("find_roots preconditions")
{
    CHECK_THROWS_AS(find_roots(FloatPolynomial::one()), PreconditionError);
    CHECK_THROWS_AS(find_roots(FloatPolynomial({1.0, 1.0}), 0.0), PreconditionError);
}

TEST_CASE("non-convergence is reported with a residual")
{
    AberthOptions starved;
    starved.max_iterations = 1;
    auto p = FloatPolynomial::one();
    for (int k = 1; k <= 10; ++k)
        p = poly_mul(p, FloatPolynomial({-static_cast<double>(k), 1.0}));
    try {
        find_roots(p, 1e-12, starved);
        FAIL("expected RootFindingError");
    } catch (const RootFindingError& e) {
        CHECK(e.best_residual() > 1e-12);
    }
}

TEST_CASE("roots_to_quadratics examples")
{
    auto quads_of = [](std::vector<std::complex<double>> roots) {
        RootMultiset r;
        r.roots = std::move(roots);
        return roots_to_quadratics(r);
    };
    const auto a = quads_of({{0, 1}, {0, -1}, {1, 0}, {-1, 0}});
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Quadratic<double>{0.0, 1.0});
    CHECK(a[1] == Quadratic<double>{0.0, -1.0});

    const auto b = quads_of({{1, 0}, {2, 0}, {-3, 0}, {-4, 0}});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Quadratic<double>{-3.0, 2.0});
    CHECK(b[1] == Quadratic<double>{7.0, 12.0});
    CHECK(count_negative_b(b) == 0);
    CHECK(oracle::min_negative_pairs({1, 2, -3, -4}) == 0);

    const auto c = quads_of({{1, 0}, {-1, 0}, {2, 0}, {3, 0}});
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Quadratic<double>{-5.0, 6.0});
    CHECK(c[1] == Quadratic<double>{0.0, -1.0});
    CHECK(count_negative_b(c) == 1);
    CHECK(oracle::min_negative_pairs({1, -1, 2, 3}) == 1);
}

TEST_CASE("odd leftovers pair with zeros")
{
    RootMultiset r;
    r.roots = {{2, 0}, {-3, 0}, {0, 0}, {0, 0}};
    const auto q = roots_to_quadratics(r);
    CHECK(count_negative_b(q) == 0);
    REQUIRE(q.size() == 2);
}

TEST_CASE("roots_to_quadratics errors")
{
    RootMultiset odd;
    odd.roots = {{1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(roots_to_quadratics(odd), ConjugacyError);
    RootMultiset lonely;
    lonely.roots = {{0, 1}, {5, 0}};
    CHECK_THROWS_AS(roots_to_quadratics(lonely), ConjugacyError);
}

}  // TEST_SUITE

TEST_SUITE("inertia") {

TEST_CASE("diagonal matrix")
{
    const RationalMatrix m(3, {1, 0, 0, 0, -1, 0, 0, 0, 0});
    CHECK(refined_inertia_of(m) == RefinedInertia{1, 1, 1, 0});
    CHECK(refined_inertia_of(to_float(m)) == RefinedInertia{1, 1, 1, 0});
}

TEST_CASE("realization of (t^2+1)(t^2+2)(t^2+3)")
{
    const auto block = realize_obs2(Rational(1), Rational(2), Rational(3));
    CHECK(refined_inertia_of(block.matrix) == RefinedInertia{0, 0, 0, 3});
}

TEST_CASE("the certificate polynomial has inertia (3,3,0,1)")
{
    const auto f = poly_product<Rational>(certificate_factors());
    CHECK(refined_inertia_of(companion_matrix(f)) == RefinedInertia{3, 3, 0, 1});
    CHECK(classify_roots(find_roots(to_float(f)), kDefaultTolerance) == RefinedInertia{3, 3, 0, 1});
}

TEST_CASE("nilpotent matrices are all zero eigenvalues")
{
    const RationalMatrix n(3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(refined_inertia_of(n) == RefinedInertia{0, 0, 3, 0});
}

TEST_CASE("tuple enumeration")
{
    const auto all = all_refined_inertias(8);
    CHECK(all.size() == 95);
    for (const auto& nu : all) {
        CHECK(nu.total() == 8);
        CHECK(nu.nonnegative());
    }
    CHECK(all_refined_inertias(2).size() == 7);
    CHECK(to_string(RefinedInertia{3, 3, 0, 1}) == "(3,3,0,1)");
}

}  // TEST_SUITE
