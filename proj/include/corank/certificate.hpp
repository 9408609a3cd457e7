#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace corank {

// Certificate that a group surjects onto a free group of rank `target_rank`
// with abstract generators f1, ..., fn. `images` gives the homomorphism on
// source generators; `witnesses` lists n distinct source generators whose
// images are exactly the single letters f1, ..., fn in order, which makes
// surjectivity evident.
struct FreeQuotientCertificate {
    int target_rank = 0;
    std::map<std::string, Word> images;
    std::vector<std::string> witnesses;
};

inline std::string free_target_gen(int k) { return "f" + std::to_string(k + 1); }

// Throws premise_error with a precise reason when the certificate fails.
inline void verify_free_quotient(const GroupPresentation& p,
                                 const FreeQuotientCertificate& cert) {
    require_premise(cert.target_rank >= 1, "certificate target rank must be >= 1");
    std::set<std::string> target;
    for (int k = 0; k < cert.target_rank; ++k) target.insert(free_target_gen(k));

    for (const auto& g : p.gens)
        require_premise(cert.images.count(g) != 0,
                        "certificate gives no image for generator \"" + g + "\"");
    for (const auto& [g, w] : cert.images) {
        require_premise(p.gen_index(g) >= 0,
                        "certificate maps unknown generator \"" + g + "\"");
        for (const Letter& l : w)
            require_premise(target.count(l.gen) != 0,
                            "image of \"" + g + "\" uses letter \"" + l.gen +
                            "\" outside the free target f1..f" +
                            std::to_string(cert.target_rank));
    }

    // homomorphism: every relator must map to the identity
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        Word im = substitute_word(p.relators[r], cert.images);
        require_premise(im.empty(),
                        "relator " + std::to_string(r) + " (" +
                        word_to_string(p.relators[r]) + ") maps to " +
                        word_to_string(im) + ", not the identity");
    }

    // surjectivity: witnesses hit the free generators exactly
    require_premise(static_cast<int>(cert.witnesses.size()) == cert.target_rank,
                    "expected " + std::to_string(cert.target_rank) +
                    " witnesses, got " + std::to_string(cert.witnesses.size()));
    std::set<std::string> seen;
    for (int k = 0; k < cert.target_rank; ++k) {
        const std::string& wgen = cert.witnesses[static_cast<std::size_t>(k)];
        require_premise(p.gen_index(wgen) >= 0,
                        "witness \"" + wgen + "\" is not a generator");
        require_premise(seen.insert(wgen).second, "duplicate witness \"" + wgen + "\"");
        auto it = cert.images.find(wgen);
        Word expect{Letter(free_target_gen(k), 1)};
        require_premise(it != cert.images.end() && free_reduce(it->second) == expect,
                        "witness \"" + wgen + "\" must map to the single letter " +
                        free_target_gen(k));
    }
}

inline bool certificate_valid(const GroupPresentation& p,
                              const FreeQuotientCertificate& cert,
                              std::string* why = nullptr) {
    try {
        verify_free_quotient(p, cert);
        return true;
    } catch (const premise_error& e) {
        if (why) *why = e.what();
        return false;
    }
}

} // namespace corank
