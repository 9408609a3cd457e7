#include <doctest.h>

#include "corank/corank.hpp"

using namespace corank;

TEST_CASE("word text round trips") {
    Word w = parse_word("a b' c^3 a^-2");
    REQUIRE(w.size() == 7);
    CHECK(w[0] == Letter("a", 1));
    CHECK(w[1] == Letter("b", -1));
    CHECK(w[2] == Letter("c", 1));
    CHECK(w[4] == Letter("c", 1));
    CHECK(w[5] == Letter("a", -1));
    CHECK(word_to_string(w) == "a b' c^3 a^-2");

    CHECK(parse_word("1").empty());
    CHECK(parse_word(" 1  1 ").empty());
    CHECK(word_to_string(Word{}) == "1");
    CHECK(word_to_string(parse_word("x_1 x_1 Y")) == "x_1^2 Y");
}

TEST_CASE("word text rejects malformed input") {
    CHECK_THROWS_AS(parse_word("a^"), input_error);
    CHECK_THROWS_AS(parse_word("a^0"), input_error);
    CHECK_THROWS_AS(parse_word("3a"), input_error);
    CHECK_THROWS_AS(parse_word("a^+"), input_error);
    CHECK_THROWS_AS(parse_word("-a"), input_error);
}

TEST_CASE("generator names") {
    CHECK(valid_gen_name("a"));
    CHECK(valid_gen_name("x_12"));
    CHECK(valid_gen_name("_t"));
    CHECK(!valid_gen_name(""));
    CHECK(!valid_gen_name("2x"));
    CHECK(!valid_gen_name("a-b"));
}

TEST_CASE("free reduction and group operations") {
    CHECK(free_reduce(parse_word("a a' b b' c")) == parse_word("c"));
    CHECK(free_reduce(parse_word("a b b' a' x")) == parse_word("x"));
    CHECK(words_equal(word_mul(parse_word("a b"), parse_word("b' a'")), Word{}));
    CHECK(word_inverse(parse_word("a b c'")) == parse_word("c b' a'"));
    CHECK(words_equal(word_conjugate(parse_word("u v"), parse_word("g")),
                      parse_word("u v g v' u'")));
    CHECK(count_occurrences(parse_word("a b a' a"), "a") == 3);
    CHECK(count_occurrences(parse_word("a b a' a"), "c") == 0);
}

TEST_CASE("rotation equality") {
    Word w = parse_word("a b c");
    CHECK(words_equal_up_to_rotation(w, parse_word("b c a")));
    CHECK(words_equal_up_to_rotation(w, parse_word("c a b")));
    CHECK(!words_equal_up_to_rotation(w, parse_word("a c b")));
    CHECK(words_equal_up_to_rotation(Word{}, parse_word("1")));
    CHECK(!words_equal_up_to_rotation(w, parse_word("a b")));
}

TEST_CASE("substitution respects signs") {
    std::map<std::string, Word> images{{"a", parse_word("x y")}};
    CHECK(substitute_word(parse_word("a b a'"), images) == parse_word("x y b y' x'"));
    CHECK(substitute_word(parse_word("a a'"), images).empty());
}

TEST_CASE("random word identities") {
    Rng rng(corank_seed() ^ 0x0110d0ULL);
    const std::vector<std::string> gens = {"a", "b", "c"};
    for (int n = 0; n < 300; ++n) {
        Word u, v;
        for (std::size_t i = 0, len = rng.below(8); i < len; ++i)
            u.push_back(Letter(gens[rng.below(3)], rng.coin() ? 1 : -1));
        for (std::size_t i = 0, len = rng.below(8); i < len; ++i)
            v.push_back(Letter(gens[rng.below(3)], rng.coin() ? 1 : -1));
        CHECK(word_mul(u, word_inverse(u)).empty());
        CHECK(words_equal(word_inverse(word_mul(u, v)),
                          word_mul(word_inverse(v), word_inverse(u))));
        Word r = free_reduce(u);
        // rotation equality is conjugacy of relators, so cyclically reduce first
        while (r.size() >= 2 && r.front() == r.back().inverse()) {
            r.pop_back();
            r.erase(r.begin());
        }
        if (!r.empty())
            CHECK(words_equal_up_to_rotation(r, rotate_left(r, rng.below(r.size()))));
        CHECK(parse_word(word_to_string(u)) == u);
    }
}
