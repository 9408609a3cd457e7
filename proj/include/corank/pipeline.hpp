#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelianize.hpp"
#include "certificate.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "fox.hpp"
#include "json_io.hpp"
#include "module_ops.hpp"
#include "obstruction.hpp"
#include "presentation.hpp"

namespace corank {

// ---- file helpers -----------------------------------------------------------

inline std::string load_text(const std::string& path) {
    std::ifstream in(path);
    require_input(in.good(), "cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json load_json(const std::string& path) {
    try {
        return Json::parse(load_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("bad JSON in \"" + path + "\": " + e.what());
    }
}

inline std::string fixture_root(const std::string& override_dir = "") {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("CORANK_FIXTURES")) return env;
#ifdef CORANK_FIXTURE_DIR
    return CORANK_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

// ---- presentation scripts -----------------------------------------------------

// Replay recorded presentation moves. drop_relator changes the group unless
// the relator is redundant, so it only runs under the trust flag.
inline GroupPresentation apply_pres_script(const GroupPresentation& p, const PresTrace& script,
                                           bool trust_redundant, bool* used_trust = nullptr,
                                           PresTrace* trace = nullptr) {
    GroupPresentation cur = p;
    for (const auto& mv : script) {
        if (mv.kind == "eliminate") {
            require_input(mv.relator >= 0 && !mv.gen.empty(),
                          "eliminate move needs \"relator\" and \"gen\"");
            cur = eliminate_generator(cur, static_cast<std::size_t>(mv.relator), mv.gen, trace);
        } else if (mv.kind == "drop_relator") {
            require_input(mv.relator >= 0, "drop_relator move needs \"relator\"");
            require_premise(trust_redundant,
                            "drop_relator discards relator " + std::to_string(mv.relator) +
                            "; it is only sound for redundant relators "
                            "(pass --trust-redundant to accept)");
            if (used_trust) *used_trust = true;
            cur = drop_relator(cur, static_cast<std::size_t>(mv.relator), trace);
        } else if (mv.kind == "kill") {
            require_input(!mv.gen.empty(), "kill move needs \"gen\"");
            cur = kill_generators(cur, {mv.gen}, trace);
        } else if (mv.kind == "auto_simplify") {
            SimplifyResult s = auto_simplify(cur);
            cur = s.pres;
            if (trace) trace->insert(trace->end(), s.trace.begin(), s.trace.end());
        } else {
            throw input_error("unknown presentation move \"" + mv.kind + "\"");
        }
    }
    return cur;
}

// ---- obstruction drivers ---------------------------------------------------------

struct PipelineOptions {
    std::vector<std::string> basis;                   // requested H_1 basis, may be empty
    PresTrace pres_script;                            // presentation moves to replay
    bool trust_redundant = false;
    bool auto_simplify_first = false;                 // run auto_simplify before anything else
    std::optional<ReductionScript> reduction;         // explicit script; otherwise auto_reduce
    std::map<std::string, std::string> substitution;  // ring substitution before torsion
    std::vector<std::int64_t> primes = {2, 3, 5};
    std::optional<FreeQuotientCertificate> certificate;
};

// Everything produced along one obstruction run, kept for auditing/tests.
struct ObstructionRun {
    GroupPresentation input;
    GroupPresentation working;       // after scripts / simplification
    PresTrace pres_moves;
    bool used_trust = false;
    AbelianizationMap ab;            // on the working presentation
    GroupPresentation normalized;    // after normalize_generating_set (summand only)
    AbelianizationMap ab_normalized;
    ModulePresentation<Int> module;      // as constructed
    ModulePresentation<Int> display;     // rows cleared of negative exponents
    ModulePresentation<Int> reduced;     // after the reduction script
    ReductionScript script;              // the script that was applied
    ModulePresentation<Int> final_row;   // reduced, after any substitution
    std::size_t rank = 0;
    TorsionVerdict torsion;
    FreenessVerdict freeness;
    std::optional<CorankBounds> cert_bounds;
    ObstructionReport report;
};

namespace pipedetail {

inline void common_tail(ObstructionRun& run, const PipelineOptions& opt,
                        std::vector<std::string>& lines) {
    run.display = normalize_rows(run.module);
    if (opt.reduction) {
        run.script = *opt.reduction;
        run.reduced = apply_reduction(run.display, run.script);
        lines.push_back("applied the supplied reduction script (" +
                        std::to_string(run.script.size()) + " moves)");
    } else {
        AutoReduceResult<Int> ar = auto_reduce(run.display);
        run.script = ar.script;
        run.reduced = ar.reduced;
        lines.push_back("auto-reduction performed " + std::to_string(run.script.size()) +
                        " moves");
    }
    lines.push_back("reduced matrix is " + std::to_string(run.reduced.rows()) + " x " +
                    std::to_string(run.reduced.cols()));

    run.rank = module_rank(run.module);
    std::size_t rank_reduced = module_rank(run.reduced);
    require_internal(run.rank == rank_reduced,
                     "module rank changed under reduction moves: " +
                     std::to_string(run.rank) + " vs " + std::to_string(rank_reduced));
    lines.push_back("module rank " + std::to_string(run.rank));

    run.final_row = run.reduced;
    if (!opt.substitution.empty()) {
        run.final_row = module_substitute(run.reduced, opt.substitution);
        std::string s = "substituted variables:";
        for (const auto& [k, v] : opt.substitution) s += " " + k + " -> " + v;
        lines.push_back(s);
    }
    run.torsion = torsion_verdict(run.final_row);
    switch (run.torsion.kind) {
    case TorsionVerdict::torsion_free:
        lines.push_back("torsion-free: entries " + std::to_string(run.torsion.witness_i) +
                        " and " + std::to_string(run.torsion.witness_j) +
                        " of the reduced row have unit gcd");
        break;
    case TorsionVerdict::has_torsion:
        lines.push_back("torsion detected: common factor " +
                        poly_to_string(run.torsion.common_factor));
        break;
    case TorsionVerdict::inconclusive:
        lines.push_back("torsion test inconclusive");
        break;
    }

    run.freeness = freeness_verdict(run.module, run.rank, opt.primes);
    if (run.freeness.kind == FreenessVerdict::not_free)
        lines.push_back("not free: E_" + std::to_string(run.rank) + " mod " +
                        std::to_string(run.freeness.prime) + " is a proper ideal");
    else
        lines.push_back("freeness undecided for the given primes (one-sided test)");
}

inline std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

} // namespace pipedetail

// Upper bound route through the absolute module of a Betti-number-2 group
// (e.g. one boundary-sum summand). Produces co-rank <= 1 when the module is
// rank 1, torsion-free and not free.
inline ObstructionRun obstruct_summand(const GroupPresentation& pres,
                                       const PipelineOptions& opt) {
    ObstructionRun run;
    run.input = pres;
    std::vector<std::string> lines;

    run.working = apply_pres_script(pres, opt.pres_script, opt.trust_redundant,
                                    &run.used_trust, &run.pres_moves);
    if (opt.auto_simplify_first) {
        SimplifyResult s = auto_simplify(run.working);
        run.working = s.pres;
        run.pres_moves.insert(run.pres_moves.end(), s.trace.begin(), s.trace.end());
    }
    if (!opt.pres_script.empty())
        lines.push_back("presentation script: " + std::to_string(run.pres_moves.size()) +
                        " moves applied" +
                        std::string(run.used_trust ? " (includes a drop_relator accepted "
                                                     "via --trust-redundant)"
                                                   : ""));
    run.ab = abelianize(run.working, opt.basis);
    lines.push_back("first Betti number " + std::to_string(run.ab.rank) + ", basis " +
                    [&] {
                        std::string s;
                        for (const auto& b : run.ab.basis) s += (s.empty() ? "" : ", ") + b;
                        return s;
                    }());

    auto [npres, nab] = normalize_generating_set(run.working, run.ab);
    run.normalized = npres;
    run.ab_normalized = nab;
    run.module = absolute_module(npres, nab);
    lines.push_back("absolute module over Z[" +
                    [&] {
                        std::string s;
                        for (const auto& v : *run.module.ring)
                            s += (s.empty() ? "" : ", ") + v + "^{+-1}";
                        return s;
                    }() +
                    "], " + std::to_string(run.module.rows()) + " x " +
                    std::to_string(run.module.cols()));

    pipedetail::common_tail(run, opt, lines);

    CorankBounds upper = upper_bound_summand(run.ab.rank, run.rank, run.torsion, run.freeness);
    CorankBounds lower;
    lower.lower = corank_lower_from_betti(run.ab.rank);
    if (opt.certificate) {
        // verified against the group as given (scripts are Tietze moves or
        // trusted-redundant drops, so the group is the same)
        verify_free_quotient(run.input, *opt.certificate);
        run.cert_bounds = lower_bound_from_certificate(run.ab.rank, opt.certificate->target_rank);
        lower.lower = std::max(lower.lower, run.cert_bounds->lower);
        lines.push_back("free-quotient certificate verified: co-rank >= " +
                        std::to_string(opt.certificate->target_rank));
    }
    CorankBounds bounds;
    bounds.lower = lower.lower;
    bounds.upper = upper.upper;
    require_internal(!bounds.upper || bounds.lower <= *bounds.upper,
                     "co-rank bounds crossed");
    lines.push_back("co-rank bounds: " + std::to_string(bounds.lower) + " <= c <= " +
                    std::to_string(*bounds.upper));
    if (*bounds.upper < 2)
        lines.push_back("the group is not very large: no surjection onto a free group "
                        "of rank 2 exists");

    run.report.source = "summand";
    run.report.betti = run.ab.rank;
    run.report.lemma = "rank-1 torsion-free non-free absolute module: co-rank <= 1";
    run.report.rank = run.rank;
    run.report.torsion = run.torsion;
    run.report.freeness = run.freeness;
    run.report.bounds = bounds;
    run.report.narrative = pipedetail::join_lines(lines);
    run.report.scripts.emplace_back("reduction", run.script);
    return run;
}

// Upper bound route through the relative module: Betti number n, module rank
// n, torsion-free, not free gives co-rank <= n - 1.
inline ObstructionRun obstruct_relative(const GroupPresentation& pres,
                                        const PipelineOptions& opt, int expected_betti) {
    ObstructionRun run;
    run.input = pres;
    std::vector<std::string> lines;

    run.working = apply_pres_script(pres, opt.pres_script, opt.trust_redundant,
                                    &run.used_trust, &run.pres_moves);
    if (opt.auto_simplify_first) {
        SimplifyResult s = auto_simplify(run.working);
        run.working = s.pres;
        run.pres_moves.insert(run.pres_moves.end(), s.trace.begin(), s.trace.end());
        lines.push_back("auto-simplified to " + std::to_string(run.working.gens.size()) +
                        " generators, " + std::to_string(run.working.relators.size()) +
                        " relators");
    }
    if (run.used_trust)
        lines.push_back("presentation script included a drop_relator accepted via "
                        "--trust-redundant");

    run.ab = abelianize(run.working, opt.basis);
    require_premise(run.ab.rank == expected_betti,
                    "expected first Betti number " + std::to_string(expected_betti) +
                    ", got " + std::to_string(run.ab.rank));
    lines.push_back("first Betti number " + std::to_string(run.ab.rank) + ", basis " +
                    [&] {
                        std::string s;
                        for (const auto& b : run.ab.basis) s += (s.empty() ? "" : ", ") + b;
                        return s;
                    }());
    run.normalized = run.working;
    run.ab_normalized = run.ab;
    run.module = relative_module(run.working, run.ab);
    lines.push_back("relative module: Fox Jacobian " + std::to_string(run.module.rows()) +
                    " x " + std::to_string(run.module.cols()));

    pipedetail::common_tail(run, opt, lines);

    CorankBounds upper = upper_bound_relative(run.ab.rank, run.rank, run.torsion, run.freeness);
    CorankBounds bounds;
    bounds.lower = corank_lower_from_betti(run.ab.rank);
    if (opt.certificate) {
        verify_free_quotient(run.input, *opt.certificate);
        run.cert_bounds = lower_bound_from_certificate(run.ab.rank, opt.certificate->target_rank);
        bounds.lower = std::max(bounds.lower, run.cert_bounds->lower);
        lines.push_back("free-quotient certificate verified: co-rank >= " +
                        std::to_string(opt.certificate->target_rank));
    }
    bounds.upper = upper.upper;
    require_internal(!bounds.upper || bounds.lower <= *bounds.upper, "co-rank bounds crossed");
    lines.push_back("co-rank bounds: " + std::to_string(bounds.lower) + " <= c <= " +
                    std::to_string(*bounds.upper));
    if (bounds.tight())
        lines.push_back("co-rank determined exactly: c = " + std::to_string(bounds.lower));

    run.report.source = "relative";
    run.report.betti = run.ab.rank;
    run.report.lemma = "rank-n torsion-free non-free relative module: co-rank <= n - 1";
    run.report.rank = run.rank;
    run.report.torsion = run.torsion;
    run.report.freeness = run.freeness;
    run.report.bounds = bounds;
    run.report.narrative = pipedetail::join_lines(lines);
    run.report.scripts.emplace_back("reduction", run.script);
    return run;
}

} // namespace corank
