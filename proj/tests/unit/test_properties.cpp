#include "helpers.hpp"
#include "properties.hpp"

// Smaller runs of the acceptance property suites with different seeds.

TEST_CASE("vertex enumeration property") {
    const auto o = props::vertex_enumeration(60, 101);
    INFO(o.failure);
    CHECK(o.ok);
    CHECK(o.checks > 60);
}

TEST_CASE("linear-power scaling property") {
    const auto o = props::linear_power_scaling(25, 202);
    INFO(o.failure);
    CHECK(o.ok);
}

TEST_CASE("fixture-wide properties") {
    for (const auto &o : {props::np_scaled_sp_divisibility(), props::sgt_and_boundC(), props::graded_family_axiom()}) {
        INFO(o.failure);
        CHECK(o.ok);
        CHECK(o.checks > 0);
    }
}
