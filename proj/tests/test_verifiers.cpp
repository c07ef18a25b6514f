#include "signpat/verifiers.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace signpat;

namespace {

RationalPolynomial rpoly(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c)
        r.emplace_back(v);
    return RationalPolynomial(r);
}

const SignPattern& pattern_T()
{
    static const SignPattern t = builtin_pattern({PatternName::Kind::T});
    return t;
}

const SignPattern& pattern_Tprime()
{
    static const SignPattern t = builtin_pattern({PatternName::Kind::Tprime});
    return t;
}

RealizationReport<Rational> obs2_report()
{
    const auto block = realize_obs2(Rational(1), Rational(2), Rational(3));
    return {block.matrix, pattern_T(), rpoly({6, 0, 11, 0, 6, 0, 1}), 0.0, 0.0, {}, true};
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("T, 1000 samples, seed 42")
{
    const auto rep = check_identity_T(1000, 42);
    CHECK(rep.all_passed);
    CHECK(rep.samples == 1000);
    CHECK_FALSE(rep.first_failure.has_value());
}

TEST_CASE("T', 1000 samples, seed 7")
{
    const auto rep = check_identity_Tprime(1000, 7);
    CHECK(rep.all_passed);
    CHECK(rep.trace_zero_samples == 250);
}

TEST_CASE("a3 and a5 share a sign over T")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto r = random_conforming_matrix(pattern_T(), rng);
        const auto cp = char_poly(r);
        CHECK(sgn(cp[3]) == sgn(cp[5]));
        CHECK(cp[3] == expected_a3(r, false));
        CHECK(cp[5] == expected_a5(r));
    }
}

TEST_CASE("the r31 term vanishes over T")
{
    std::mt19937_64 rng(4);
    const auto r = random_conforming_matrix(pattern_T(), rng);
    CHECK(expected_a3(r, true) == expected_a3(r, false));
}

TEST_CASE("trace-zero samples over T' are not nilpotent")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        auto r = random_conforming_matrix(pattern_Tprime(), rng);
        r = r.with_entry(1, 1, -r(0, 0));
        const auto cp = char_poly(r);
        CHECK(cp[5] == 0);
        CHECK(cp[3] == -r(0, 1) * r(1, 2) * r(2, 0));
        CHECK(cp[3] != 0);
        CHECK_FALSE(is_nilpotent(r));
        CHECK(check_identity_sample(r, pattern_Tprime()) == SampleVerdict::Pass);
    }
}

TEST_CASE("corrupted samples are rejected before any arithmetic")
{
    std::mt19937_64 rng(6);
    const auto r = random_conforming_matrix(pattern_T(), rng).with_entry(2, 3, Rational(0));
    CHECK(check_identity_sample(r, pattern_T()) == SampleVerdict::NonConforming);
    CHECK_THROWS_AS(check_identity_sample(r, builtin_pattern({PatternName::Kind::D})), PreconditionError);
}

TEST_CASE("a sample that breaks the closed form is reported")
{
    // A T' sample checked against the T formula misses the r31 term.
    std::mt19937_64 rng(8);
    const auto r = random_conforming_matrix(pattern_Tprime(), rng);
    CHECK(char_poly(r)[3] != expected_a3(r, false));
}

TEST_CASE("random conforming matrices conform")
{
    std::mt19937_64 rng(9);
    for (const auto& p : {pattern_T(), pattern_Tprime(), builtin_pattern({PatternName::Kind::TD})})
        CHECK(conforms(random_conforming_matrix(p, rng), p));
}

}  // TEST_SUITE

TEST_SUITE("divisor certificate") {

TEST_CASE("four degree-6 divisors, all violating")
{
    const auto rep = check_obs12();
    CHECK(rep.passed);
    REQUIRE(rep.divisors.size() == 4);
    for (const auto& d : rep.divisors)
        CHECK(d.violates);
    CHECK(poly_product<Rational>(rep.factors) == rep.f);
    CHECK(rep.f == oracle::schoolbook(oracle::schoolbook(rpoly({1, 1, 1}), rpoly({2, -1, 1})),
                                      oracle::schoolbook(rpoly({1, 0, 1}), rpoly({-1, 0, 1}))));
}

TEST_CASE("the two named divisors")
{
    const auto first = oracle::schoolbook(oracle::schoolbook(rpoly({1, 1, 1}), rpoly({2, -1, 1})), rpoly({1, 0, 1}));
    CHECK(first == rpoly({2, 1, 4, 1, 3, 0, 1}));
    CHECK(first[5] == 0);
    CHECK(first[3] == 1);
    const auto second = oracle::schoolbook(oracle::schoolbook(rpoly({1, 1, 1}), rpoly({1, 0, 1})), rpoly({-1, 0, 1}));
    CHECK(second == rpoly({-1, -1, -1, 0, 1, 1, 1}));
    CHECK(second[5] == 1);
    CHECK(second[3] == 0);

    const auto rep = check_obs12();
    int found = 0;
    for (const auto& d : rep.divisors)
        if (d.divisor == first || d.divisor == second)
            ++found;
    CHECK(found == 2);
}

}  // TEST_SUITE

TEST_SUITE("verify_realization") {

TEST_CASE("exact recomputation accepts with zero tolerance")
{
    CHECK(verify_realization(obs2_report(), 0.0));
}

TEST_CASE("negated entry fails conformance")
{
    auto rep = obs2_report();
    rep.matrix = rep.matrix.with_entry(0, 0, -rep.matrix(0, 0));
    CHECK_FALSE(verify_realization(rep, 1e-9));
}

TEST_CASE("perturbed target fails the residual")
{
    auto rep = obs2_report();
    std::vector<Rational> c(rep.target.coeffs().begin(), rep.target.coeffs().end());
    c[0] += 1;
    rep.target = RationalPolynomial(c);
    CHECK_FALSE(verify_realization(rep, 1e-9));
}

TEST_CASE("float reports")
{
    std::mt19937_64 rng(12);
    const auto f = random_monic(16, 5.0, rng);
    auto rep = realize_V(f, 1, 5);
    CHECK(verify_realization(rep, 1e-6));
    rep.pattern = builtin_pattern(PatternName::v(0, 8));
    CHECK_FALSE(verify_realization(rep, 1e-6));
}

}  // TEST_SUITE

TEST_SUITE("theorem") {

TEST_CASE("nilpotence")
{
    CHECK(is_nilpotent(RationalMatrix(2, {0, 1, 0, 0})));
    CHECK_FALSE(is_nilpotent(RationalMatrix::identity(2)));
    CHECK(is_nilpotent(realize_obs2(Rational(0), Rational(0), Rational(0)).matrix));
}

TEST_CASE("random_monic respects the bound")
{
    std::mt19937_64 rng(1);
    const auto p = random_monic(12, 2.5, rng);
    CHECK(p.degree() == 12);
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(std::abs(p[i]) <= 2.5);
    CHECK(p[12] == 1.0);
}

TEST_CASE("default configuration passes every part")
{
    const auto rep = run_theorem_suite(TheoremConfig{});
    CHECK(rep.part1.passed());
    CHECK(rep.part2.passed());
    CHECK(rep.part3.passed());
    for (const auto* part : {&rep.part1, &rep.part2, &rep.part3})
        for (const auto& e : part->evidence) {
            CAPTURE(e.name);
            CHECK(e.passed);
            CHECK((e.kind == "exact" || e.kind == "sampled" || e.kind == "construction"));
        }
}

TEST_CASE("serial and parallel runs agree")
{
    TheoremConfig cfg;
    cfg.identity_samples = 40;
    cfg.part1_targets = 2;
    cfg.part3_targets = 1;
    cfg.parallel = false;
    const auto serial = run_theorem_suite(cfg);
    cfg.parallel = true;
    const auto parallel = run_theorem_suite(cfg);
    REQUIRE(serial.part1.evidence.size() == parallel.part1.evidence.size());
    for (std::size_t k = 0; k < serial.part1.evidence.size(); ++k)
        CHECK(serial.part1.evidence[k].detail == parallel.part1.evidence[k].detail);
    CHECK(serial.passed() == parallel.passed());
}

}  // TEST_SUITE
