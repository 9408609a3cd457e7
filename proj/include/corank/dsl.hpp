#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace corank {

// Presentation text format:
//
//   # comment to end of line
//   gens: a b c d
//   rels:
//     a c e
//     b d f, f c b c' f' a'   # commas separate relators on one line
//
// The first content line must be `gens:`; relators follow a `rels:` header
// (which may carry relators on the same line). `1` denotes the empty word.
// A missing `rels:` section gives a free group.

namespace detail {
inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}
inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}
} // namespace detail

inline GroupPresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    GroupPresentation p;
    bool saw_gens = false, saw_rels = false;

    auto fail = [&](const std::string& msg) -> void {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(detail::strip_comment(raw));
        if (line.empty()) continue;

        if (!saw_gens) {
            if (line.rfind("gens:", 0) != 0) fail("expected `gens:` as the first content line");
            std::istringstream gs(line.substr(5));
            std::string name;
            while (gs >> name) {
                if (!valid_gen_name(name)) fail("bad generator name \"" + name + "\"");
                p.gens.push_back(name);
            }
            if (p.gens.empty()) fail("`gens:` line declares no generators");
            saw_gens = true;
            continue;
        }

        std::string rel_text = line;
        if (!saw_rels) {
            if (line.rfind("rels:", 0) != 0) fail("expected `rels:` before relator lines");
            saw_rels = true;
            rel_text = detail::trim(line.substr(5));
            if (rel_text.empty()) continue;
        }

        std::size_t start = 0;
        while (start <= rel_text.size()) {
            std::size_t comma = rel_text.find(',', start);
            std::string piece = detail::trim(comma == std::string::npos
                                                 ? rel_text.substr(start)
                                                 : rel_text.substr(start, comma - start));
            if (!piece.empty()) {
                Word w;
                try {
                    w = parse_word(piece);
                } catch (const input_error& e) {
                    fail(e.what());
                }
                for (const Letter& l : w)
                    if (p.gen_index(l.gen) < 0)
                        fail("relator uses undeclared generator \"" + l.gen + "\"");
                p.relators.push_back(w); // may be empty (written as `1`)
            } else if (comma != std::string::npos) {
                fail("empty relator between commas (write `1` for the trivial word)");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (!saw_gens) throw input_error("line " + std::to_string(lineno) + ": missing `gens:` line");
    p.validate();
    return p;
}

inline std::string presentation_to_dsl(const GroupPresentation& p) {
    std::string out = "gens:";
    for (const auto& g : p.gens) out += " " + g;
    out += "\n";
    if (!p.relators.empty()) {
        out += "rels:\n";
        for (const Word& r : p.relators) out += "  " + word_to_string(r) + "\n";
    }
    return out;
}

} // namespace corank
