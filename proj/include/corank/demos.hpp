#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace corank {

// ---- worked example: the tripus -------------------------------------------
// A two-boundary-component handlebody-like piece whose group has Betti
// number 2. The pipeline runs twice: once on the 2-relator presentation
// (one redundant relator dropped under trust, explicit reduction script) and
// once on the full 3-relator presentation (automatic reduction); elementary
// ideals and all verdicts must agree between the two.

struct TripusDemo {
    ObstructionRun main; // 2 relators, scripted reduction
    ObstructionRun full; // 3 relators, automatic reduction
    bool ideals_agree_q = false;
    std::map<std::int64_t, bool> ideals_agree_p;
    ModulePresentation<Fp> final_mod2; // reduced row with coefficients mod 2
};

inline TripusDemo demo_tripus(const std::string& fixtures) {
    const std::string dir = fixtures + "/tripus/";
    GroupPresentation pres = parse_presentation(load_text(dir + "presentation.dsl"));
    PresTrace script = pres_trace_from_json(load_json(dir + "pres_script.json"));
    ReductionScript reduction =
        reduction_script_from_json(load_json(dir + "reduction_script.json"));

    TripusDemo demo;
    PipelineOptions main_opt;
    main_opt.basis = {"a", "c"};
    main_opt.pres_script = script;
    main_opt.trust_redundant = true;
    main_opt.reduction = reduction;
    demo.main = obstruct_summand(pres, main_opt);

    PipelineOptions full_opt;
    full_opt.basis = {"a", "c"};
    for (const auto& mv : script)
        if (mv.kind != "drop_relator") full_opt.pres_script.push_back(mv);
    demo.full = obstruct_summand(pres, full_opt);

    // elementary ideals are invariants of the module, so the dropped relator
    // (being redundant) must not change them over any coefficients
    demo.ideals_agree_q = true;
    for (int k = 0; k <= 2; ++k) {
        PolyIdeal<Rat> a = elementary_ideal(module_to_rational(demo.main.module), k);
        PolyIdeal<Rat> b = elementary_ideal(module_to_rational(demo.full.module), k);
        demo.ideals_agree_q = demo.ideals_agree_q && ideal_equal(a, b);
    }
    for (std::int64_t p : {2, 3, 5}) {
        bool ok = true;
        for (int k = 0; k <= 2; ++k) {
            PolyIdeal<Fp> a = elementary_ideal(module_mod_p(demo.main.module, p), k);
            PolyIdeal<Fp> b = elementary_ideal(module_mod_p(demo.full.module, p), k);
            ok = ok && ideal_equal(a, b);
        }
        demo.ideals_agree_p[p] = ok;
    }
    demo.final_mod2 = module_mod_p(demo.main.final_row, 2);
    return demo;
}

// ---- worked example: a genus-3 string link exterior -------------------------
// Betti number 3. The relative module route bounds the co-rank above by 2;
// a free-quotient certificate matches it below, pinning co-rank = 2.

struct Genus3Demo {
    ObstructionRun main;
    FreeQuotientCertificate cert;
};

inline Genus3Demo demo_genus3(const std::string& fixtures) {
    const std::string dir = fixtures + "/genus3/";
    GroupPresentation pres = parse_presentation(load_text(dir + "presentation.dsl"));
    Genus3Demo demo;
    demo.cert = certificate_from_json(load_json(dir + "certificate.json"));

    PipelineOptions opt;
    opt.auto_simplify_first = true;
    opt.basis = {"b", "t", "x"};
    opt.reduction = reduction_script_from_json(load_json(dir + "reduction_script.json"));
    opt.substitution = {{"b", "t"}};
    opt.certificate = demo.cert;
    demo.main = obstruct_relative(pres, opt, 3);
    return demo;
}

// ---- tower of boundary-connected sums ----------------------------------------
// Pieces of boundary genus 1, 2, 3 with pinned co-rank (the genus-2 and
// genus-3 values are the two demos above; genus 1 is a free group of rank 1)
// are summed to any genus g. Co-rank adds, so the bounds stay tight and meet
// the threshold r(g) = ceil(g/2) exactly: the towers are never very large
// relative to their genus.

struct TowerDemo {
    struct Line {
        long genus = 0;
        std::string decomposition;
        CorankBounds bounds;
        long threshold = 0; // r_of_g
        bool matches = false;
    };
    std::vector<Line> lines;
    bool all_match = true;
};

inline TowerDemo demo_tower(long max_genus) {
    require_input(max_genus >= 1, "tower demo needs genus >= 1");

    // genus-1 piece established live: a free group of rank 1
    GroupPresentation y1 = parse_presentation("gens: a\n");
    AbelianizationMap ab1 = abelianize(y1);
    require_internal(ab1.rank == 1, "genus-1 piece must have Betti number 1");
    FreeQuotientCertificate c1;
    c1.target_rank = 1;
    c1.images["a"] = parse_word("f1");
    c1.witnesses = {"a"};
    verify_free_quotient(y1, c1);
    CorankBounds piece1;
    piece1.lower = 1;
    piece1.upper = 1; // co-rank never exceeds the Betti number

    CorankBounds piece2; // tripus piece: co-rank 1 (see demo_tripus)
    piece2.lower = 1;
    piece2.upper = 1;
    CorankBounds piece3; // genus-3 piece: co-rank 2 (see demo_genus3)
    piece3.lower = 2;
    piece3.upper = 2;

    TowerDemo demo;
    for (long g = 1; g <= max_genus; ++g) {
        TowerDemo::Line line;
        line.genus = g;
        CorankBounds acc; // co-rank 0 for the empty sum
        acc.upper = 0;
        if (g == 1) {
            acc = piece1;
            line.decomposition = "Y1";
        } else if (g % 2 == 0) {
            for (long i = 0; i < g / 2; ++i) acc = combine_boundary_sum(acc, piece2);
            line.decomposition = std::to_string(g / 2) + " x Y2";
        } else {
            for (long i = 0; i < (g - 3) / 2; ++i) acc = combine_boundary_sum(acc, piece2);
            acc = combine_boundary_sum(acc, piece3);
            line.decomposition =
                (g > 3 ? std::to_string((g - 3) / 2) + " x Y2 + " : "") + std::string("Y3");
        }
        line.bounds = acc;
        line.threshold = r_of_g(g);
        line.matches = acc.tight() && acc.lower == line.threshold;
        demo.all_match = demo.all_match && line.matches;
        demo.lines.push_back(line);
    }
    return demo;
}

} // namespace corank
