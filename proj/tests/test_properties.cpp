#include "support/properties.hpp"

#include <doctest.h>

namespace {

void expect(const props::Outcome& o)
{
    INFO(o.name);
    INFO(o.first_failure);
    CHECK(o.cases >= 200);
    CHECK(o.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("char_poly against cofactor expansion") { expect(props::char_poly_matches_cofactor()); }
TEST_CASE("char_poly block multiplicativity") { expect(props::char_poly_block_multiplicative()); }
TEST_CASE("superpattern partial order") { expect(props::superpattern_order()); }
TEST_CASE("blockwise conformance") { expect(props::block_conformance()); }
TEST_CASE("quadratic reconstruction") { expect(props::quadratic_reconstruction()); }
TEST_CASE("root residuals") { expect(props::root_residuals()); }
TEST_CASE("inertia additivity") { expect(props::inertia_additivity()); }
TEST_CASE("even-triple realizer") { expect(props::even_triple_realizer()); }
TEST_CASE("gated sextic realizer") { expect(props::gated_sextic_realizer()); }
TEST_CASE("gate soundness") { expect(props::gate_soundness()); }
TEST_CASE("realize_V residual") { expect(props::realize_v_residual()); }
TEST_CASE("nilpotence over blocks") { expect(props::nilpotence_lift()); }
TEST_CASE("json round trip") { expect(props::json_round_trip()); }

}  // TEST_SUITE
