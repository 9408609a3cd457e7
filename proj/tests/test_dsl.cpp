#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corank/corank.hpp"

using namespace corank;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("presentation text parses fixtures") {
    GroupPresentation p = parse_presentation(slurp(fixture_root() + "/tripus/presentation.dsl"));
    CHECK(p.gens == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    REQUIRE(p.relators.size() == 5);
    CHECK(p.relators[0] == parse_word("a c e"));
    CHECK(p.relators[2] == parse_word("f c b c' f' a'"));

    GroupPresentation q = parse_presentation(slurp(fixture_root() + "/genus3/presentation.dsl"));
    CHECK(q.gens.size() == 15);
    CHECK(q.relators.size() == 12);
    CHECK(q.relators[0] == parse_word("z u z' w'"));
    CHECK(q.relators[11] == parse_word("y a y' b'"));
}

TEST_CASE("presentation text round trips") {
    const std::string text =
        "gens: a b c\n"
        "rels:\n"
        "  a b a' b'\n"
        "  1\n"
        "  c^3\n";
    GroupPresentation p = parse_presentation(text);
    REQUIRE(p.relators.size() == 3);
    CHECK(p.relators[1].empty());
    GroupPresentation again = parse_presentation(presentation_to_dsl(p));
    CHECK(again.gens == p.gens);
    CHECK(again.relators == p.relators);

    GroupPresentation free_group = parse_presentation("gens: x y\n");
    CHECK(free_group.relators.empty());
    CHECK(presentation_to_dsl(free_group) == "gens: x y\n");
}

TEST_CASE("presentation text accepts comments, blanks, and commas") {
    const std::string text =
        "# leading comment\n"
        "\n"
        "gens: a b   # trailing comment\n"
        "rels: a b, b a\n"
        "  a^2, 1\n";
    GroupPresentation p = parse_presentation(text);
    CHECK(p.gens == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relators.size() == 4);
    CHECK(p.relators[1] == parse_word("b a"));
    CHECK(p.relators[3].empty());
}

TEST_CASE("presentation text reports line numbers on errors") {
    auto message_of = [](const std::string& text) {
        try {
            parse_presentation(text);
        } catch (const input_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("rels:\n  a\n").find("line 1") != std::string::npos);
    CHECK(message_of("gens: a\n  a a\n").find("line 2") != std::string::npos);
    CHECK(message_of("gens: a\nrels:\n  b\n").find("undeclared") != std::string::npos);
    CHECK(message_of("gens: a 2x\n").find("bad generator name") != std::string::npos);
    CHECK(message_of("gens: a\nrels: a,, a\n").find("empty relator") != std::string::npos);
    CHECK(message_of("").find("missing `gens:`") != std::string::npos);
    CHECK_THROWS_AS(parse_presentation("gens:\n"), input_error);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), input_error);
}
