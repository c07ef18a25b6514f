#include "signpat/json_io.hpp"

#include <doctest.h>

using namespace signpat;

TEST_SUITE("json") {

TEST_CASE("pattern round trip")
{
    const auto p = builtin_pattern({PatternName::Kind::TD});
    const auto j = to_json(p);
    CHECK(j["n"] == 8);
    CHECK(pattern_from_json(json::parse(j.dump())) == p);
}

TEST_CASE("rational matrix round trip uses p/q strings")
{
    const RationalMatrix m(2, {Rational(1, 3), Rational(-2), Rational(0), Rational(7, 5)});
    const auto j = to_json(m);
    CHECK(j["entries"][0][0] == "1/3");
    CHECK(j["entries"][0][1] == "-2/1");
    CHECK(rational_matrix_from_json(json::parse(j.dump())) == m);
}

TEST_CASE("float matrix round trip is bit exact")
{
    const FloatMatrix m(2, {0.1, -1e-300, 3.0, 1.0 / 3.0});
    CHECK(float_matrix_from_json(json::parse(to_json(m).dump())) == m);
}

TEST_CASE("polynomials")
{
    const RationalPolynomial p({Rational(-1, 2), Rational(3), Rational(1)});
    const auto j = json::parse(to_json(p).dump());
    CHECK(polynomial_json_is_rational(j));
    CHECK(rational_polynomial_from_json(j) == p);

    const FloatPolynomial f({0.25, -7.5, 1.0});
    const auto jf = json::parse(to_json(f).dump());
    CHECK_FALSE(polynomial_json_is_rational(jf));
    CHECK(float_polynomial_from_json(jf) == f);
    // Plain numbers read onto the rational backend exactly.
    CHECK(rational_polynomial_from_json(jf) == to_rational(f));
    CHECK(float_polynomial_from_json(j) == to_float(p));
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(rational_polynomial_from_json(json::parse(R"({"coef": [1]})")), PreconditionError);
    CHECK_THROWS_AS(rational_polynomial_from_json(json::parse(R"({"coeffs": []})")), PreconditionError);
    CHECK_THROWS_AS(rational_polynomial_from_json(json::parse(R"({"coeffs": ["1/0", 1]})")), std::invalid_argument);
    CHECK_THROWS_AS(rational_polynomial_from_json(json::parse(R"({"coeffs": [true, 1]})")), PreconditionError);
    CHECK_THROWS_AS(float_matrix_from_json(json::parse(R"({"n": 2, "entries": [[1, 2]]})")), PreconditionError);
    CHECK_THROWS_AS(float_matrix_from_json(json::parse(R"({"n": 0, "entries": []})")), PreconditionError);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"n": 1, "rows": ["x"]})")), PreconditionError);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"([1, 2])")), PreconditionError);
}

TEST_CASE("reports carry their backend")
{
    const RationalPolynomial f({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)});
    auto g = f;
    for (int k = 0; k < 3; ++k)
        g = poly_mul(g, RationalPolynomial({Rational(k), Rational(0), Rational(1)}));
    const auto r = realize_V(g, 0, 5);
    const auto j = to_json(r);
    CHECK(j["backend"] == "rational");
    CHECK(rational_matrix_from_json(j["matrix"]) == r.matrix);
    CHECK(pattern_from_json(j["pattern"]) == r.pattern);
    CHECK(rational_polynomial_from_json(j["target"]) == g);
    CHECK(j["plan"]["layout"].size() == 5);

    const auto rf = realize_V(to_float(g), 0, 5);
    const auto jf = to_json(rf);
    CHECK(jf["backend"] == "float");
    CHECK(float_matrix_from_json(jf["matrix"]) == rf.matrix);
}

TEST_CASE("inertia and quadratics")
{
    const auto j = to_json(RefinedInertia{3, 3, 0, 1});
    CHECK(j["n_plus"] == 3);
    CHECK(j["n_imag"] == 1);
    const auto q = to_json(std::vector<Quadratic<double>>{{0.0, 1.0}, {-3.0, 2.0}});
    CHECK(q.size() == 2);
    CHECK(q[1]["a"] == -3.0);
}

}  // TEST_SUITE
