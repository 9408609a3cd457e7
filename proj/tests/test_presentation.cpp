#include <doctest.h>

#include <sstream>

#include "corank/corank.hpp"

using namespace corank;

namespace {
GroupPresentation make(const std::string& gens_line, std::vector<std::string> rels) {
    GroupPresentation p;
    {
        std::istringstream in(gens_line);
        std::string g;
        while (in >> g) p.gens.push_back(g);
    }
    for (const auto& r : rels) p.relators.push_back(parse_word(r));
    p.validate();
    return p;
}
} // namespace

TEST_CASE("generator elimination solves a relator") {
    GroupPresentation p = make("a b c", {"a c b'", "b b a"});
    // relator 0 contains b' once: b = a c
    GroupPresentation q = eliminate_generator(p, 0, "b");
    CHECK(q.gens == std::vector<std::string>{"a", "c"});
    REQUIRE(q.relators.size() == 1);
    CHECK(words_equal(q.relators[0], parse_word("a c a c a")));

    CHECK_THROWS_AS(eliminate_generator(p, 1, "b"), premise_error); // occurs twice
    CHECK_THROWS_AS(eliminate_generator(p, 0, "z"), input_error);
    CHECK_THROWS_AS(eliminate_generator(p, 5, "a"), input_error);
    // occurrences are counted after free reduction: a b a' a reduces to a b
    GroupPresentation r = make("a b", {"a b a' a"});
    CHECK(eliminate_generator(r, 0, "a").gens == std::vector<std::string>{"b"});
}

TEST_CASE("scripted eliminations reproduce the surface-complement relators") {
    GroupPresentation p =
        parse_presentation(load_text(fixture_root() + "/tripus/presentation.dsl"));
    PresTrace trace;
    p = eliminate_generator(p, 0, "e", &trace);
    p = eliminate_generator(p, 0, "f", &trace);
    CHECK(p.gens == std::vector<std::string>{"a", "b", "c", "d"});
    REQUIRE(p.relators.size() == 3);
    CHECK(words_equal(p.relators[0], parse_word("d' b' c b c' b d a'")));
    CHECK(words_equal(p.relators[1], parse_word("b c' a' d a c b' c'")));
    CHECK(words_equal(p.relators[2], parse_word("d a d' b' a' d' a c")));
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].kind == "eliminate");
    CHECK(trace[0].gen == "e");
    CHECK(trace[1].gen == "f");

    GroupPresentation dropped = drop_relator(p, 2);
    CHECK(dropped.relators.size() == 2);
    CHECK(words_equal(dropped.relators[0], p.relators[0]));
    CHECK_THROWS_AS(drop_relator(p, 3), input_error);
}

TEST_CASE("greedy simplification collapses a trivial group") {
    GroupPresentation p = make("a b", {"a b", "b"});
    SimplifyResult res = auto_simplify(p);
    CHECK(res.pres.gens.empty());
    CHECK(res.pres.relators.empty());
    std::vector<std::pair<int, std::string>> elims;
    for (const auto& mv : res.trace)
        if (mv.kind == "eliminate") elims.push_back({mv.relator, mv.gen});
    CHECK(elims == std::vector<std::pair<int, std::string>>{{1, "b"}, {0, "a"}});
}

TEST_CASE("greedy simplification leaves free and guarded presentations alone") {
    GroupPresentation free_p = make("x y", {});
    SimplifyResult res = auto_simplify(free_p);
    CHECK(res.pres.gens == free_p.gens);
    CHECK(res.trace.empty());

    // every generator of the commutator relator occurs twice: nothing to do
    GroupPresentation surf = make("a b", {"a b a' b'"});
    CHECK(auto_simplify(surf).trace.empty());

    // every candidate sits in a long relator and occurs elsewhere: guarded
    GroupPresentation guarded = make("a b c", {"a b a b a c", "c b b a a"});
    for (const auto& mv : auto_simplify(guarded).trace) CHECK(mv.kind != "eliminate");
}

TEST_CASE("greedy simplification drops empty relators and records it") {
    GroupPresentation p = make("a b", {"1", "a b a' b'"});
    SimplifyResult res = auto_simplify(p);
    REQUIRE(!res.trace.empty());
    CHECK(res.trace[0].kind == "drop_empty");
    CHECK(res.trace[0].relator == 0);
    CHECK(res.pres.relators.size() == 1);
}

TEST_CASE("killing generators erases their letters") {
    GroupPresentation p = make("a b c", {"a b a' b'", "b", "a c"});
    GroupPresentation q = kill_generators(p, {"b"});
    CHECK(q.gens == std::vector<std::string>{"a", "c"});
    REQUIRE(q.relators.size() == 1); // first two relators become empty
    CHECK(q.relators[0] == parse_word("a c"));
    CHECK_THROWS_AS(kill_generators(p, {"zz"}), input_error);
}

TEST_CASE("generating-set substitution checks mutual inverses") {
    GroupPresentation p = make("a b", {"a b"});
    std::map<std::string, Word> table{{"a", parse_word("x y'")}, {"b", parse_word("y")}};
    std::vector<std::pair<std::string, Word>> inv{{"x", parse_word("a b")},
                                                  {"y", parse_word("b")}};
    GroupPresentation q = substitute_generators(p, table, inv);
    CHECK(q.gens == std::vector<std::string>{"x", "y"});
    REQUIRE(q.relators.size() == 1);
    CHECK(words_equal(q.relators[0], parse_word("x")));

    std::map<std::string, Word> bad{{"a", parse_word("x")}, {"b", parse_word("x")}};
    CHECK_THROWS_AS(substitute_generators(p, bad, inv), premise_error);
    std::map<std::string, Word> partial{{"a", parse_word("x")}};
    CHECK_THROWS_AS(substitute_generators(p, partial, inv), input_error);
}
