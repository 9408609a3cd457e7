#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abelianize.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace corank {

namespace foxdetail {

inline Expo image_expo(const AbelianizationMap& ab, const std::string& gen) {
    const std::vector<Int>& v = ab.image(gen);
    Expo e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        require_internal(v[i] >= -1000000 && v[i] <= 1000000,
                         "abelianized exponent out of range");
        e[i] = static_cast<int>(v[i]);
    }
    return e;
}

} // namespace foxdetail

// Monomial image of a word under the abelianization: t^{sum of letter images}.
inline LaurentPoly<Int> word_monomial(const RingPtr& ring, const AbelianizationMap& ab,
                                      const Word& w) {
    Expo e(ring->size(), 0);
    for (const Letter& l : w) {
        Expo im = foxdetail::image_expo(ab, l.gen);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += l.sign * im[i];
    }
    return LaurentPoly<Int>::monomial(ring, e, Int(1));
}

// Free differential calculus, evaluated through the abelianization:
// d(uv) = du + u_ab * dv, d(g)/dg = 1, d(g^-1)/dg = -g_ab^-1.
// Letter by letter: an occurrence of g at position k contributes
// +t^{ab(prefix before k)}; an occurrence of g^-1 contributes
// -t^{ab(prefix through k)}.
inline LaurentPoly<Int> fox_derivative(const RingPtr& ring, const AbelianizationMap& ab,
                                       const Word& w, const std::string& gen) {
    LaurentPoly<Int> acc(ring);
    Expo prefix(ring->size(), 0);
    for (const Letter& l : w) {
        Expo im = foxdetail::image_expo(ab, l.gen);
        Expo next = prefix;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += l.sign * im[i];
        if (l.gen == gen)
            acc.add_term(l.sign == 1 ? prefix : next, Int(l.sign));
        prefix = next;
    }
    return acc;
}

// The ring of the first homology: one Laurent variable per basis generator,
// named after it.
inline RingPtr homology_ring(const AbelianizationMap& ab) {
    return make_ring(ab.basis);
}

// Presentation matrix of the relative homology module: full Fox Jacobian,
// one row per relator, one column per group generator.
inline ModulePresentation<Int> relative_module(const GroupPresentation& p,
                                               const AbelianizationMap& ab) {
    RingPtr ring = homology_ring(ab);
    ModulePresentation<Int> mp;
    mp.ring = ring;
    mp.generators = p.gens;
    for (const Word& r : p.relators) {
        std::vector<LaurentPoly<Int>> row;
        for (const auto& g : p.gens) row.push_back(fox_derivative(ring, ab, r, g));
        mp.m.push_back(std::move(row));
    }
    mp.provenance.push_back("relative homology module: Fox Jacobian, " +
                            std::to_string(mp.rows()) + " relators x " +
                            std::to_string(mp.cols()) + " generators");
    return mp;
}

// Rename each generator that is neither a basis generator nor null to a new
// null generator G = g * (basis word for its image)^-1. The first choice of
// name is the generator with its first letter uppercased; fallbacks append
// an index. Positions in the generator list are kept.
inline std::pair<GroupPresentation, AbelianizationMap>
normalize_generating_set(const GroupPresentation& p, const AbelianizationMap& ab) {
    std::set<std::string> basis_set(ab.basis.begin(), ab.basis.end());
    std::set<std::string> taken(p.gens.begin(), p.gens.end());

    auto basis_word = [&](const std::vector<Int>& v) {
        Word w;
        for (std::size_t i = 0; i < ab.basis.size(); ++i) {
            long long k = static_cast<long long>(v[i]);
            for (long long j = 0; j < std::abs(k); ++j)
                w.emplace_back(ab.basis[i], k > 0 ? 1 : -1);
        }
        return w;
    };

    std::map<std::string, Word> table;                       // old -> word in new
    std::vector<std::pair<std::string, Word>> inverse_table; // new -> word in old
    std::map<std::string, std::string> renamed;
    for (const auto& g : p.gens) {
        if (basis_set.count(g) || ab.is_null(g)) {
            table[g] = Word{Letter(g, 1)};
            inverse_table.emplace_back(g, Word{Letter(g, 1)});
            continue;
        }
        std::string name = g;
        if (!name.empty())
            name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        for (int k = 0; name == g || taken.count(name); ++k)
            name = g + "_" + std::to_string(k);
        taken.insert(name);
        renamed[g] = name;
        Word bw = basis_word(ab.image(g));
        table[g] = word_mul(Word{Letter(name, 1)}, bw);            // g = G * t^im
        inverse_table.emplace_back(name, word_mul(Word{Letter(g, 1)}, word_inverse(bw)));
    }

    GroupPresentation np = substitute_generators(p, table, inverse_table);
    AbelianizationMap nab;
    nab.rank = ab.rank;
    nab.basis = ab.basis;
    for (const auto& g : p.gens) {
        auto it = renamed.find(g);
        if (it == renamed.end())
            nab.images[g] = ab.image(g);
        else
            nab.images[it->second] = std::vector<Int>(static_cast<std::size_t>(ab.rank), Int(0));
    }
    return {np, nab};
}

// Presentation matrix of the absolute homology module for first Betti number
// 1 or 2. Preconditions: every generator is a basis generator or null. For
// rank 2 the module needs one extra generator Theta (the commutator class of
// the two basis generators); its column entry q for a relator r satisfies
//   dr/dx1 = q * (1 - t2)   and   dr/dx2 = q * (t1 - 1),
// forced by the fundamental identity of Fox calculus since r and all null
// generators die in homology. Both routes are computed and must agree.
inline ModulePresentation<Int> absolute_module(const GroupPresentation& p,
                                               const AbelianizationMap& ab) {
    require_premise(ab.rank == 1 || ab.rank == 2,
                    "absolute module construction needs first Betti number 1 or 2, got " +
                    std::to_string(ab.rank));
    std::set<std::string> basis_set(ab.basis.begin(), ab.basis.end());
    std::vector<std::string> null_gens;
    for (const auto& g : p.gens) {
        if (basis_set.count(g)) continue;
        require_premise(ab.is_null(g),
                        "generator \"" + g + "\" is neither a basis generator nor null; "
                        "apply normalize_generating_set first");
        null_gens.push_back(g);
    }
    RingPtr ring = homology_ring(ab);

    ModulePresentation<Int> mp;
    mp.ring = ring;
    mp.generators = null_gens;
    if (ab.rank == 2) mp.generators.push_back("Theta");

    LaurentPoly<Int> one = LaurentPoly<Int>::constant(ring, Int(1));
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        require_internal(word_monomial(ring, ab, r).is_one(),
                         "relator " + std::to_string(ri) + " is not null in homology");
        std::vector<LaurentPoly<Int>> row;
        for (const auto& g : null_gens) row.push_back(fox_derivative(ring, ab, r, g));
        if (ab.rank == 2) {
            LaurentPoly<Int> d1 = fox_derivative(ring, ab, r, ab.basis[0]);
            LaurentPoly<Int> d2 = fox_derivative(ring, ab, r, ab.basis[1]);
            LaurentPoly<Int> t1 = LaurentPoly<Int>::variable(ring, ab.basis[0], 1, Int(1));
            LaurentPoly<Int> t2 = LaurentPoly<Int>::variable(ring, ab.basis[1], 1, Int(1));
            LaurentPoly<Int> q(ring);
            if (d1.is_zero() && d2.is_zero()) {
                // q stays 0
            } else {
                q = exact_divide(d1, one - t2);
                LaurentPoly<Int> q2 = exact_divide(d2, t1 - one);
                require_internal(q == q2,
                                 "commutator-column entry disagrees between its two routes");
            }
            row.push_back(q);
        } else {
            // rank 1: the identity forces dr/dx1 * (t1 - 1) = 0, so dr/dx1 = 0
            LaurentPoly<Int> d1 = fox_derivative(ring, ab, r, ab.basis[0]);
            require_internal(d1.is_zero(), "basis column failed to vanish at rank 1");
        }
        mp.m.push_back(std::move(row));
    }
    mp.provenance.push_back("absolute homology module: " + std::to_string(mp.rows()) +
                            " relators x " + std::to_string(mp.cols()) +
                            " generators (null generators" +
                            std::string(ab.rank == 2 ? " + Theta" : "") + ")");
    return mp;
}

} // namespace corank
