#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace corank {

// Finitely presented group <gens | relators>. Generator order is significant
// (it fixes matrix column order downstream); relators are words over gens.
struct GroupPresentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    int gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        std::set<std::string> seen;
        for (const auto& g : gens) {
            require_input(valid_gen_name(g), "bad generator name \"" + g + "\"");
            require_input(seen.insert(g).second, "duplicate generator \"" + g + "\"");
        }
        for (std::size_t r = 0; r < relators.size(); ++r)
            for (const Letter& l : relators[r])
                require_input(seen.count(l.gen) != 0,
                              "relator " + std::to_string(r + 1) +
                              " uses undeclared generator \"" + l.gen + "\"");
    }
};

// One step of a presentation transformation, recorded so a run can be
// replayed or audited.
struct PresMove {
    std::string kind;   // eliminate | drop_empty | drop_relator | kill | rename
    int relator = -1;   // index at the time of the move (0-based), -1 if n/a
    std::string gen;    // generator involved, empty if n/a
    std::string detail; // e.g. the replacement word of an elimination
};

using PresTrace = std::vector<PresMove>;

// Solve relator `ri` (which must contain `gen` exactly once) for `gen`,
// substitute the solution everywhere else, and remove both the relator and
// the generator. Tietze-equivalent, so the group is unchanged.
inline GroupPresentation eliminate_generator(const GroupPresentation& p,
                                             std::size_t ri,
                                             const std::string& gen,
                                             PresTrace* trace = nullptr) {
    require_input(ri < p.relators.size(), "relator index out of range");
    require_input(p.gen_index(gen) >= 0, "unknown generator \"" + gen + "\"");
    const Word rel = free_reduce(p.relators[ri]);
    require_premise(count_occurrences(rel, gen) == 1,
                    "generator \"" + gen + "\" does not occur exactly once in relator " +
                    std::to_string(ri));
    std::size_t pos = 0;
    while (rel[pos].gen != gen) ++pos;
    Word u(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos));
    Word v(rel.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rel.end());
    // u g v = 1  =>  g = u^-1 v^-1 ; u g^-1 v = 1  =>  g = v u
    Word replacement = (rel[pos].sign == 1) ? word_mul(word_inverse(u), word_inverse(v))
                                            : word_mul(v, u);
    std::map<std::string, Word> images{{gen, replacement}};
    GroupPresentation out;
    for (const auto& g : p.gens)
        if (g != gen) out.gens.push_back(g);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r == ri) continue;
        out.relators.push_back(substitute_word(p.relators[r], images));
    }
    if (trace)
        trace->push_back({"eliminate", static_cast<int>(ri), gen, word_to_string(replacement)});
    return out;
}

// Quotient by setting every generator in `kill` equal to 1: erase their
// letters, freely reduce, drop relators that become empty.
inline GroupPresentation kill_generators(const GroupPresentation& p,
                                         const std::set<std::string>& kill,
                                         PresTrace* trace = nullptr) {
    for (const auto& g : kill)
        require_input(p.gen_index(g) >= 0, "unknown generator \"" + g + "\" in kill set");
    GroupPresentation out;
    for (const auto& g : p.gens)
        if (!kill.count(g)) out.gens.push_back(g);
    for (const Word& r : p.relators) {
        Word w;
        for (const Letter& l : r)
            if (!kill.count(l.gen)) w.push_back(l);
        w = free_reduce(w);
        if (!w.empty()) out.relators.push_back(w);
    }
    if (trace)
        for (const auto& g : kill) trace->push_back({"kill", -1, g, ""});
    return out;
}

// Remove one relator. Only sound when the relator is a consequence of the
// others; callers gate this behind an explicit trust flag.
inline GroupPresentation drop_relator(const GroupPresentation& p, std::size_t ri,
                                      PresTrace* trace = nullptr) {
    require_input(ri < p.relators.size(), "relator index out of range");
    GroupPresentation out = p;
    out.relators.erase(out.relators.begin() + static_cast<std::ptrdiff_t>(ri));
    if (trace) trace->push_back({"drop_relator", static_cast<int>(ri), "", ""});
    return out;
}

// Replace the generating set. `table` sends each old generator to a word in
// the new generators; `inverse_table` (an ordered list fixing the new
// generator order) sends each new generator to a word in the old ones.
// The two tables must be mutually inverse, which keeps the group unchanged.
inline GroupPresentation substitute_generators(
    const GroupPresentation& p,
    const std::map<std::string, Word>& table,
    const std::vector<std::pair<std::string, Word>>& inverse_table) {
    require_input(table.size() == p.gens.size(), "substitution table must cover every generator");
    for (const auto& g : p.gens)
        require_input(table.count(g) != 0, "substitution table missing generator \"" + g + "\"");
    std::map<std::string, Word> inv;
    std::vector<std::string> new_gens;
    for (const auto& [n, w] : inverse_table) {
        require_input(valid_gen_name(n), "bad generator name \"" + n + "\"");
        require_input(inv.emplace(n, w).second, "duplicate new generator \"" + n + "\"");
        new_gens.push_back(n);
    }
    // mutual inverse check: old -> new -> old and new -> old -> new
    for (const auto& g : p.gens) {
        Word round = substitute_word(substitute_word(Word{Letter(g, 1)}, table), inv);
        require_premise(round == Word{Letter(g, 1)},
                        "substitution tables are not mutually inverse at \"" + g + "\"");
    }
    for (const auto& n : new_gens) {
        Word round = substitute_word(substitute_word(Word{Letter(n, 1)}, inv), table);
        require_premise(round == Word{Letter(n, 1)},
                        "substitution tables are not mutually inverse at \"" + n + "\"");
    }
    GroupPresentation out;
    out.gens = new_gens;
    for (const Word& r : p.relators) out.relators.push_back(substitute_word(r, table));
    return out;
}

struct SimplifyResult {
    GroupPresentation pres;
    PresTrace trace;
};

// Deterministic greedy simplification by generator elimination.
//
// Repeatedly: drop empty relators; among pairs (relator i, generator g) with
// g occurring exactly once in relator i, choose the one minimizing
// (relator length, occurrences of g elsewhere, i, declared index of g) and
// eliminate — but only while the chosen relator is short (length <= 4) or
// the generator occurs nowhere else (so no other relator grows). The guard
// keeps long Wirtinger-style relators from being smeared across the whole
// presentation, which in practice collapses past the useful normal form.
inline SimplifyResult auto_simplify(const GroupPresentation& p) {
    SimplifyResult res{p, {}};
    for (auto& r : res.pres.relators) r = free_reduce(r);
    for (;;) {
        // drop empties first, recording indices at the time of each drop
        for (std::size_t i = 0; i < res.pres.relators.size();) {
            if (res.pres.relators[i].empty()) {
                res.trace.push_back({"drop_empty", static_cast<int>(i), "", ""});
                res.pres.relators.erase(res.pres.relators.begin() +
                                        static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        struct Cand {
            std::size_t len, outside, rel;
            int gidx;
        };
        bool found = false;
        Cand best{0, 0, 0, 0};
        std::string best_gen;
        for (std::size_t i = 0; i < res.pres.relators.size(); ++i) {
            const Word& rel = res.pres.relators[i];
            for (int gi = 0; gi < static_cast<int>(res.pres.gens.size()); ++gi) {
                const std::string& g = res.pres.gens[static_cast<std::size_t>(gi)];
                if (count_occurrences(rel, g) != 1) continue;
                std::size_t outside = 0;
                for (std::size_t j = 0; j < res.pres.relators.size(); ++j)
                    if (j != i)
                        outside += static_cast<std::size_t>(count_occurrences(res.pres.relators[j], g));
                Cand c{rel.size(), outside, i, gi};
                auto key = [](const Cand& x) {
                    return std::tuple(x.len, x.outside, x.rel, x.gidx);
                };
                if (!found || key(c) < key(best)) {
                    found = true;
                    best = c;
                    best_gen = g;
                }
            }
        }
        if (!found) break;
        if (best.len > 4 && best.outside > 0) break;
        res.pres = eliminate_generator(res.pres, best.rel, best_gen, &res.trace);
        for (auto& r : res.pres.relators) r = free_reduce(r);
    }
    return res;
}

} // namespace corank
