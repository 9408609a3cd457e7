#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"
#include "presentation.hpp"

namespace corank {

// Image of H_1 = G^ab as a free abelian group with a chosen basis drawn from
// the generators. `images[g]` is the coordinate vector of g in that basis.
struct AbelianizationMap {
    int rank = 0;
    std::vector<std::string> basis;
    std::map<std::string, std::vector<Int>> images;

    const std::vector<Int>& image(const std::string& gen) const {
        auto it = images.find(gen);
        require_input(it != images.end(), "no abelianized image for generator \"" + gen + "\"");
        return it->second;
    }
    bool is_null(const std::string& gen) const {
        for (const Int& c : image(gen))
            if (c != 0) return false;
        return true;
    }
};

namespace detail {

// Coordinates of every generator on the free part of G^ab, computed from the
// Smith form of the (generators x relators) exponent matrix.
inline std::vector<std::vector<Int>> free_coordinates(const GroupPresentation& p,
                                                      std::size_t* out_rank) {
    const std::size_t g = p.gens.size(), r = p.relators.size();
    IntMatrix A(g, std::max<std::size_t>(r, 1)); // columns = relator exponent vectors
    for (std::size_t j = 0; j < r; ++j)
        for (const Letter& l : p.relators[j])
            A.at(static_cast<std::size_t>(p.gen_index(l.gen)), j) += l.sign;
    SnfResult snf = smith_normal_form(A);
    std::vector<Int> diag = snf.diagonal();
    for (const Int& d : diag)
        require_premise(d == 0 || d == 1,
                        "abelianization has torsion (invariant factor " + d.str() +
                        "); a free H_1 is required");
    // free coordinates = rows of U where the diagonal entry is 0 (or beyond it)
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < g; ++i)
        if (i >= diag.size() || diag[i] == 0) free_rows.push_back(i);
    *out_rank = free_rows.size();
    std::vector<std::vector<Int>> coords(g, std::vector<Int>(free_rows.size()));
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t k = 0; k < free_rows.size(); ++k)
            coords[j][k] = snf.U.at(free_rows[k], j);
    return coords;
}

} // namespace detail

// Compute G^ab with a generator-subset basis. If `requested_basis` is empty,
// the lexicographically first subset of generators (by declared index tuples)
// whose images form a unimodular matrix is chosen. H_1 torsion is an error.
inline AbelianizationMap abelianize(const GroupPresentation& p,
                                    const std::vector<std::string>& requested_basis = {}) {
    p.validate();
    std::size_t rank = 0;
    std::vector<std::vector<Int>> coords = detail::free_coordinates(p, &rank);

    std::vector<std::size_t> basis_idx;
    if (!requested_basis.empty()) {
        require_input(requested_basis.size() == rank,
                      "requested basis has " + std::to_string(requested_basis.size()) +
                      " generators but the free rank is " + std::to_string(rank));
        for (const auto& name : requested_basis) {
            int gi = p.gen_index(name);
            require_input(gi >= 0, "unknown generator \"" + name + "\" in requested basis");
            basis_idx.push_back(static_cast<std::size_t>(gi));
        }
        IntMatrix B(rank, rank);
        for (std::size_t c = 0; c < rank; ++c)
            for (std::size_t k = 0; k < rank; ++k) B.at(k, c) = coords[basis_idx[c]][k];
        Int d = rank ? int_det(B) : Int(1);
        require_premise(d == 1 || d == -1,
                        "requested generators do not form a basis of H_1 "
                        "(determinant " + d.str() + ")");
    } else if (rank > 0) {
        // first combination (i_1 < ... < i_rank) with unimodular image matrix
        std::vector<std::size_t> comb(rank);
        for (std::size_t k = 0; k < rank; ++k) comb[k] = k;
        const std::size_t g = p.gens.size();
        for (;;) {
            IntMatrix B(rank, rank);
            for (std::size_t c = 0; c < rank; ++c)
                for (std::size_t k = 0; k < rank; ++k) B.at(k, c) = coords[comb[c]][k];
            Int d = int_det(B);
            if (d == 1 || d == -1) {
                basis_idx = comb;
                break;
            }
            // next combination
            std::size_t t = rank;
            while (t > 0 && comb[t - 1] == g - rank + (t - 1)) --t;
            require_premise(t > 0, "no generator subset forms a basis of H_1");
            ++comb[t - 1];
            for (std::size_t k = t; k < rank; ++k) comb[k] = comb[k - 1] + 1;
        }
    }

    AbelianizationMap out;
    out.rank = static_cast<int>(rank);
    for (std::size_t c : basis_idx) out.basis.push_back(p.gens[c]);

    // rewrite all coordinates in the chosen basis: new = B^{-1} * old
    IntMatrix Binv(0, 0);
    if (rank > 0) {
        IntMatrix B(rank, rank);
        for (std::size_t c = 0; c < rank; ++c)
            for (std::size_t k = 0; k < rank; ++k) B.at(k, c) = coords[basis_idx[c]][k];
        Binv = unimodular_inverse(B);
    }
    for (std::size_t j = 0; j < p.gens.size(); ++j) {
        std::vector<Int> v(rank, Int(0));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t k = 0; k < rank; ++k) v[i] += Binv.at(i, k) * coords[j][k];
        out.images[p.gens[j]] = v;
    }
    return out;
}

} // namespace corank
