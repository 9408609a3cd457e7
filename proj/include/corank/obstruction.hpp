#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "module_ops.hpp"

namespace corank {

// Bounds on the co-rank (maximal rank of a free quotient) of a group.
// An absent upper bound means no obstruction is known.
struct CorankBounds {
    long lower = 0;
    std::optional<long> upper;

    bool tight() const { return upper && *upper == lower; }
};

// Minimal free-quotient rank that makes a genus-g piece "very large":
// co-rank at least ceil(g/2) onto a non-abelian free group (so >= 2).
inline long r_of_g(long g) {
    require_input(g >= 0, "genus must be >= 0");
    return (g + 1) / 2;
}

// Lower bound for the co-rank without a certificate: any group with positive
// first Betti number surjects onto Z (a free group of rank 1).
inline long corank_lower_from_betti(int betti) { return betti >= 1 ? 1 : 0; }

// Upper bound from the absolute module of a two-generator-homology group:
// if b_1 = 2 and the module has rank 1, is torsion-free, and is not free,
// the group cannot surject onto a rank-2 free group, so co-rank <= 1.
inline CorankBounds upper_bound_summand(int betti, std::size_t rank,
                                        const TorsionVerdict& torsion,
                                        const FreenessVerdict& freeness) {
    require_premise(betti == 2, "summand bound needs first Betti number 2, got " +
                    std::to_string(betti));
    require_premise(rank == 1, "summand bound needs module rank 1, got " +
                    std::to_string(rank));
    require_premise(torsion.kind == TorsionVerdict::torsion_free,
                    "summand bound needs a torsion-free module");
    require_premise(freeness.kind == FreenessVerdict::not_free,
                    "summand bound needs a not-free module");
    CorankBounds b;
    b.lower = corank_lower_from_betti(betti);
    b.upper = 1;
    return b;
}

// Upper bound from the relative module: if b_1 = n and the relative module
// has rank n, is torsion-free, and is not free, then co-rank <= n - 1.
inline CorankBounds upper_bound_relative(int betti, std::size_t rank,
                                         const TorsionVerdict& torsion,
                                         const FreenessVerdict& freeness) {
    require_premise(betti >= 1, "relative bound needs positive first Betti number");
    require_premise(rank == static_cast<std::size_t>(betti),
                    "relative bound needs module rank equal to the Betti number (" +
                    std::to_string(betti) + "), got " + std::to_string(rank));
    require_premise(torsion.kind == TorsionVerdict::torsion_free,
                    "relative bound needs a torsion-free module");
    require_premise(freeness.kind == FreenessVerdict::not_free,
                    "relative bound needs a not-free module");
    CorankBounds b;
    b.lower = corank_lower_from_betti(betti);
    b.upper = betti - 1;
    return b;
}

// Lower bound from a verified free-quotient certificate.
inline CorankBounds lower_bound_from_certificate(int betti, int target_rank) {
    CorankBounds b;
    b.lower = std::max<long>(target_rank, corank_lower_from_betti(betti));
    return b;
}

// Co-rank is additive under boundary connected sum (free products of
// fundamental groups): bounds add, a missing upper bound absorbs.
inline CorankBounds combine_boundary_sum(const CorankBounds& a, const CorankBounds& b) {
    CorankBounds c;
    c.lower = a.lower + b.lower;
    if (a.upper && b.upper) c.upper = *a.upper + *b.upper;
    return c;
}

// Full record of one obstruction run, serializable for auditing.
struct ObstructionReport {
    std::string source;  // "summand" or "relative"
    int betti = 0;
    std::string lemma;   // which bound was applied
    std::size_t rank = 0;
    TorsionVerdict torsion;
    FreenessVerdict freeness;
    CorankBounds bounds;
    std::string narrative;
    std::vector<std::pair<std::string, ReductionScript>> scripts;
};

} // namespace corank
