#include <doctest.h>

#include <corank/obstruction.hpp>

#include "test_util.hpp"

using namespace corank;
using testutil::module_from;

namespace {

const RingPtr XY = make_ring({"x", "y"});

// verdicts produced by the real tests on small modules
TorsionVerdict torsion_free_verdict() {
    auto m = module_from(XY, {"g0", "g1"}, Json::parse(R"([["x - 1","y - 1"]])"));
    return torsion_verdict(m);
}

TorsionVerdict has_torsion_verdict() {
    auto m = module_from(XY, {"g0"}, Json::parse(R"([["2*x - 2"]])"));
    return torsion_verdict(m);
}

FreenessVerdict not_free_verdict() {
    auto m = module_from(XY, {"g0", "g1"}, Json::parse(R"([["x - 1","y - 1"]])"));
    return freeness_verdict(m, 1, {2});
}

FreenessVerdict unknown_verdict() {
    auto m = module_from(XY, {"g0", "g1"}, Json::parse(R"([["1","0"]])"));
    return freeness_verdict(m, 1, {2});
}

} // namespace

TEST_CASE("free-quotient rank demanded of a genus-g piece") {
    CHECK(r_of_g(0) == 0);
    const long want[] = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5};
    for (long g = 1; g <= 10; ++g) CHECK(r_of_g(g) == want[g - 1]);
    CHECK_THROWS_AS(r_of_g(-1), input_error);
}

TEST_CASE("betti number gives the free lower bound") {
    CHECK(corank_lower_from_betti(0) == 0);
    CHECK(corank_lower_from_betti(1) == 1);
    CHECK(corank_lower_from_betti(7) == 1);
    CHECK(corank_lower_from_betti(-3) == 0);
}

TEST_CASE("bounds are tight exactly when the ends meet") {
    CorankBounds open;
    CHECK(open.lower == 0);
    CHECK(!open.upper);
    CHECK(!open.tight());
    CorankBounds pinched{2, 2};
    CHECK(pinched.tight());
    CorankBounds gap{1, 2};
    CHECK(!gap.tight());
}

TEST_CASE("summand bound: rank-1 torsion-free not-free forces co-rank 1") {
    TorsionVerdict tf = torsion_free_verdict();
    FreenessVerdict nf = not_free_verdict();
    REQUIRE(tf.kind == TorsionVerdict::torsion_free);
    REQUIRE(nf.kind == FreenessVerdict::not_free);

    CorankBounds b = upper_bound_summand(2, 1, tf, nf);
    CHECK(b.lower == 1);
    REQUIRE(b.upper);
    CHECK(*b.upper == 1);
    CHECK(b.tight());

    SUBCASE("each premise is enforced") {
        CHECK_THROWS_AS(upper_bound_summand(3, 1, tf, nf), premise_error);
        CHECK_THROWS_AS(upper_bound_summand(2, 2, tf, nf), premise_error);
        CHECK_THROWS_AS(upper_bound_summand(2, 1, has_torsion_verdict(), nf), premise_error);
        CHECK_THROWS_AS(upper_bound_summand(2, 1, TorsionVerdict{}, nf), premise_error);
        CHECK_THROWS_AS(upper_bound_summand(2, 1, tf, unknown_verdict()), premise_error);
    }
}

TEST_CASE("relative bound: full-rank torsion-free not-free gives betti minus one") {
    TorsionVerdict tf = torsion_free_verdict();
    FreenessVerdict nf = not_free_verdict();

    CorankBounds b3 = upper_bound_relative(3, 3, tf, nf);
    CHECK(b3.lower == 1);
    REQUIRE(b3.upper);
    CHECK(*b3.upper == 2);

    CorankBounds b2 = upper_bound_relative(2, 2, tf, nf);
    CHECK(*b2.upper == 1);
    CHECK(b2.tight());

    SUBCASE("each premise is enforced") {
        CHECK_THROWS_AS(upper_bound_relative(0, 0, tf, nf), premise_error);
        CHECK_THROWS_AS(upper_bound_relative(3, 2, tf, nf), premise_error);
        CHECK_THROWS_AS(upper_bound_relative(3, 3, has_torsion_verdict(), nf), premise_error);
        CHECK_THROWS_AS(upper_bound_relative(3, 3, tf, unknown_verdict()), premise_error);
    }
}

TEST_CASE("certificate lower bound dominates the betti bound") {
    CorankBounds b = lower_bound_from_certificate(3, 2);
    CHECK(b.lower == 2);
    CHECK(!b.upper);
    CHECK(lower_bound_from_certificate(0, 0).lower == 0);
    CHECK(lower_bound_from_certificate(5, 1).lower == 1); // betti floor still applies
    CHECK(lower_bound_from_certificate(1, 3).lower == 3);
}

TEST_CASE("bounds add under boundary connected sum") {
    CorankBounds one{1, 1}, two{2, 2}, open{1, std::nullopt};

    CorankBounds s = combine_boundary_sum(one, two);
    CHECK(s.lower == 3);
    REQUIRE(s.upper);
    CHECK(*s.upper == 3);
    CHECK(s.tight());

    SUBCASE("a missing upper bound absorbs") {
        CorankBounds t = combine_boundary_sum(one, open);
        CHECK(t.lower == 2);
        CHECK(!t.upper);
        CorankBounds u = combine_boundary_sum(open, one);
        CHECK(!u.upper);
    }
    SUBCASE("default bounds contribute nothing below and absorb the upper") {
        CorankBounds z;
        CorankBounds r = combine_boundary_sum(z, one);
        CHECK(r.lower == 1);
        CHECK(!r.upper);
    }
    SUBCASE("combination is associative") {
        CorankBounds l = combine_boundary_sum(combine_boundary_sum(one, two), open);
        CorankBounds r = combine_boundary_sum(one, combine_boundary_sum(two, open));
        CHECK(l.lower == r.lower);
        CHECK(l.upper == r.upper);
    }
}
