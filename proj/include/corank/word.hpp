#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace corank {

// One letter of a word in a free group: a generator name with exponent +-1.
struct Letter {
    std::string gen;
    int sign = 1;

    Letter() = default;
    Letter(std::string g, int s) : gen(std::move(g)), sign(s) {}
    Letter inverse() const { return Letter(gen, -sign); }
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.sign == b.sign && a.gen == b.gen;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

using Word = std::vector<Letter>;

inline Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}

// Cancel adjacent g g^-1 pairs until none remain.
inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word word_mul(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return free_reduce(r);
}

inline Word word_conjugate(const Word& u, const Word& g) { // u g u^-1
    return word_mul(word_mul(u, g), word_inverse(u));
}

inline Word rotate_left(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

inline bool words_equal(const Word& a, const Word& b) {
    return free_reduce(a) == free_reduce(b);
}

// True if the freely reduced forms are equal up to cyclic rotation
// (i.e. the words are conjugate as relators).
inline bool words_equal_up_to_rotation(const Word& a, const Word& b) {
    Word ra = free_reduce(a), rb = free_reduce(b);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) return true;
    for (std::size_t k = 0; k < ra.size(); ++k)
        if (rotate_left(ra, k) == rb) return true;
    return false;
}

inline int count_occurrences(const Word& w, const std::string& gen) {
    int n = 0;
    for (const Letter& l : w)
        if (l.gen == gen) ++n;
    return n;
}

// Replace every letter by its image under `images` (generator -> word),
// respecting signs, then freely reduce. Generators absent from the table
// are kept unchanged.
template <typename Map>
inline Word substitute_word(const Word& w, const Map& images) {
    Word out;
    for (const Letter& l : w) {
        auto it = images.find(l.gen);
        if (it == images.end()) {
            out.push_back(l);
        } else {
            const Word& im = it->second;
            if (l.sign == 1)
                out.insert(out.end(), im.begin(), im.end());
            else {
                Word inv = word_inverse(im);
                out.insert(out.end(), inv.begin(), inv.end());
            }
        }
    }
    return free_reduce(out);
}

// --- textual form ---------------------------------------------------------
// A word is a whitespace-separated sequence of letters; a letter is
//   name        generator
//   name'       its inverse
//   name^k      k-fold power, k a nonzero integer (k < 0 means inverses)
// and name' ^k is not a form: write name^-k instead.

inline bool valid_gen_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_';
}

inline Word parse_word(const std::string& text) {
    Word w;
    std::size_t i = 0, n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        // `1` stands for the empty word (identity); it contributes no letters.
        if (text[i] == '1' &&
            (i + 1 == n || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        std::string name = text.substr(start, i - start);
        require_input(valid_gen_name(name),
                      "bad letter at position " + std::to_string(start + 1) +
                      " in word \"" + text + "\"");
        int sign = 1;
        long long power = 1;
        if (i < n && text[i] == '\'') {
            sign = -1;
            ++i;
        } else if (i < n && text[i] == '^') {
            ++i;
            std::size_t ps = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            require_input(i > ps && (i - ps > 1 || std::isdigit(static_cast<unsigned char>(text[ps]))),
                          "bad exponent after '^' in word \"" + text + "\"");
            power = std::stoll(text.substr(ps, i - ps));
            require_input(power != 0, "zero exponent in word \"" + text + "\"");
            if (power < 0) { sign = -1; power = -power; }
        }
        for (long long k = 0; k < power; ++k) w.emplace_back(name, sign);
    }
    return w;
}

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += ' ';
        std::size_t run = j - i;
        if (run == 1)
            out += w[i].gen + (w[i].sign < 0 ? "'" : "");
        else
            out += w[i].gen + "^" + std::to_string(w[i].sign < 0 ? -static_cast<long long>(run)
                                                                 : static_cast<long long>(run));
        i = j;
    }
    return out;
}

} // namespace corank
