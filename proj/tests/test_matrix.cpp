#include <doctest.h>

#include "corank/corank.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace corank;
using namespace testutil;

namespace {
const RingPtr XY = make_ring({"x", "y"});
LaurentPoly<Int> P(const std::string& s) { return parse_poly(XY, s); }
ModulePresentation<Int> M(const std::vector<std::vector<std::string>>& rows) {
    ModulePresentation<Int> mp;
    mp.ring = XY;
    for (std::size_t j = 0; j < (rows.empty() ? 0 : rows[0].size()); ++j)
        mp.generators.push_back("m" + std::to_string(j));
    for (const auto& row : rows) {
        std::vector<LaurentPoly<Int>> r;
        for (const auto& s : row) r.push_back(P(s));
        mp.m.push_back(r);
    }
    return mp;
}
} // namespace

TEST_CASE("row clearing monomials") {
    std::vector<LaurentPoly<Int>> row = {P("x^-1*y - 1"), P("y^-2"), P("0")};
    CHECK(row_clearing_exponents(row, 2) == Expo{1, 2});

    ModulePresentation<Int> mp = M({{"x^-1", "1"}, {"x", "y"}});
    ModulePresentation<Int> norm = normalize_rows(mp);
    CHECK(norm.m[0][0] == P("1"));
    CHECK(norm.m[0][1] == P("x"));
    CHECK(norm.m[1][0] == P("x")); // already nonnegative: untouched
    CHECK(norm.m[1][1] == P("y"));
}

TEST_CASE("fixture rows normalize to the displayed matrices") {
    for (const std::string name : {"tripus", "genus3"}) {
        Json exp = fixture_json(name);
        RingPtr ring = make_ring(exp["ring"].get<VarList>());
        ModulePresentation<Int> raw =
            module_from(ring, strings(exp["module_generators"]), exp["raw_rows"]);
        for (std::size_t i = 0; i < raw.rows(); ++i) {
            Expo shift = row_clearing_exponents(raw.m[i], ring->size());
            LaurentPoly<Int> mono = LaurentPoly<Int>::monomial(ring, shift, Int(1));
            CHECK(mono == parse_poly(ring, exp["row_clearing_monomials"][i].get<std::string>()));
        }
        CHECK(matrix_equal(normalize_rows(raw), exp["display_matrix"]));
    }
}

TEST_CASE("entry monomial stripping keeps the sign") {
    CHECK(strip_entry_monomial(P("x^-1*y - x^-1")) == P("y - 1"));
    CHECK(strip_entry_monomial(P("-x^2")) == P("-1"));
    CHECK(strip_entry_monomial(P("0")).is_zero());
    CHECK(strip_entry_monomial(P("3*x - 3")) == P("3*x - 3"));
}

TEST_CASE("matrix rank over the fraction field") {
    CHECK(matrix_rank(M({{"x", "x^2"}, {"1", "x"}})) == 1);      // proportional rows
    CHECK(matrix_rank(M({{"x", "1"}, {"1", "x"}})) == 2);        // det = x^2 - 1
    CHECK(matrix_rank(M({{"0", "0"}, {"0", "0"}})) == 0);
    CHECK(matrix_rank(M({{"x^-5", "y"}, {"x^-5", "y"}, {"1", "0"}})) == 2);
    CHECK(module_rank(M({{"x", "x^2"}, {"1", "x"}})) == 1);      // 2 generators - rank 1

    ModulePresentation<Int> empty;
    empty.ring = XY;
    empty.generators = {"g1", "g2"};
    CHECK(matrix_rank(empty) == 0);
    CHECK(module_rank(empty) == 2); // no relations: free of rank 2
}

TEST_CASE("fixture matrix ranks") {
    Json t = fixture_json("tripus");
    RingPtr tr = make_ring(t["ring"].get<VarList>());
    ModulePresentation<Int> tm =
        module_from(tr, strings(t["module_generators"]), t["display_matrix"]);
    CHECK(matrix_rank(tm) == t["matrix_rank"].get<std::size_t>());
    CHECK(module_rank(tm) == t["module_rank"].get<std::size_t>());

    Json g = fixture_json("genus3");
    RingPtr gr = make_ring(g["ring"].get<VarList>());
    ModulePresentation<Int> gm =
        module_from(gr, strings(g["module_generators"]), g["display_matrix"]);
    CHECK(matrix_rank(gm) == g["matrix_rank"].get<std::size_t>());
    CHECK(module_rank(gm) == g["module_rank"].get<std::size_t>());
}

TEST_CASE("polynomial determinants") {
    auto det2 = [&](const std::string& a, const std::string& b, const std::string& c,
                    const std::string& d) {
        return poly_det<Int>({{P(a), P(b)}, {P(c), P(d)}}, XY);
    };
    CHECK(det2("x", "1", "1", "y") == P("x*y - 1"));
    CHECK(det2("x", "x^2", "1", "x").is_zero());
    CHECK(poly_det<Int>({{P("7")}}, XY) == P("7"));
    CHECK(poly_det<Int>({{P("x"), P("0"), P("1")},
                    {P("0"), P("y"), P("0")},
                    {P("1"), P("0"), P("x")}},
                   XY) == P("x^2*y - y"));
}

TEST_CASE("bareiss and rational ranks agree on random matrices") {
    props::rank_invariance(500);
}
