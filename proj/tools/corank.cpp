// Command-line front end: parse presentations, run the homology-module
// pipeline piecewise or end to end, and replay the bundled worked examples.
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "corank/corank.hpp"

namespace {

using namespace corank;

// ---- shared plumbing --------------------------------------------------------

GroupPresentation load_presentation(const std::string& path) {
    std::string text = load_text(path);
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{')
        return presentation_from_json(Json::parse(text));
    return parse_presentation(text);
}

ModulePresentation<Int> load_module(const std::string& path) {
    return module_from_json(load_json(path));
}

template <typename C>
std::string matrix_text(const ModulePresentation<C>& mp) {
    std::ostringstream os;
    os << "columns:";
    for (const auto& g : mp.generators) os << " " << g;
    os << "\n";
    for (const auto& row : mp.m) {
        os << "[ ";
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " | " : "") << poly_to_string(row[j]);
        os << " ]\n";
    }
    return os.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

// Flags shared by every subcommand that starts from a presentation file.
struct PresFlags {
    std::string file;
    std::string pres_script_file;
    bool trust = false;
    bool auto_simp = false;
};

void add_pres_flags(CLI::App* cmd, PresFlags& f) {
    cmd->add_option("file", f.file, "presentation file (DSL text or JSON)")->required();
    cmd->add_option("--pres-script", f.pres_script_file,
                    "JSON file of presentation moves to replay first");
    cmd->add_flag("--trust-redundant", f.trust,
                  "accept drop_relator moves (sound only for redundant relators)");
    cmd->add_flag("--auto-simplify", f.auto_simp,
                  "run the automatic simplifier after any script");
}

GroupPresentation prepare(const PresFlags& f, PresTrace* trace = nullptr,
                          bool* used_trust = nullptr) {
    GroupPresentation p = load_presentation(f.file);
    if (!f.pres_script_file.empty()) {
        PresTrace script = pres_trace_from_json(load_json(f.pres_script_file));
        p = apply_pres_script(p, script, f.trust, used_trust, trace);
    }
    if (f.auto_simp) {
        SimplifyResult s = auto_simplify(p);
        p = s.pres;
        if (trace) trace->insert(trace->end(), s.trace.begin(), s.trace.end());
    }
    return p;
}

std::map<std::string, std::string> parse_substitutions(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& s : raw) {
        std::size_t eq = s.find('=');
        require_input(eq != std::string::npos && eq > 0 && eq + 1 < s.size(),
                      "--substitute expects var=var, got \"" + s + "\"");
        out[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return out;
}

// ---- worked-example assertions ----------------------------------------------

struct Checker {
    std::vector<std::pair<std::string, bool>> results;
    void check(const std::string& what, bool ok) { results.emplace_back(what, ok); }
    bool all() const {
        for (const auto& [w, ok] : results)
            if (!ok) return false;
        return true;
    }
    void print(std::ostream& os) const {
        for (const auto& [w, ok] : results)
            os << (ok ? "ok: " : "MISMATCH: ") << w << "\n";
    }
    Json to_json() const {
        Json arr = Json::array();
        for (const auto& [w, ok] : results) arr.push_back({{"check", w}, {"ok", ok}});
        return arr;
    }
};

std::vector<std::string> json_strings(const Json& arr) {
    std::vector<std::string> out;
    for (const auto& s : arr) out.push_back(s.get<std::string>());
    return out;
}

bool row_matches(const std::vector<LaurentPoly<Int>>& got, const RingPtr& ring,
                 const Json& arr) {
    if (got.size() != arr.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i] == parse_poly(ring, arr[i].get<std::string>()))) return false;
    return true;
}

bool matrix_matches(const ModulePresentation<Int>& mp, const Json& arr) {
    if (mp.rows() != arr.size()) return false;
    for (std::size_t i = 0; i < mp.rows(); ++i)
        if (!row_matches(mp.m[i], mp.ring, arr[i])) return false;
    return true;
}

bool relators_match(const std::vector<Word>& got, const Json& arr) {
    if (got.size() != arr.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!words_equal(got[i], parse_word(arr[i].get<std::string>()))) return false;
    return true;
}

bool same_up_to_rotation_or_inverse(const Word& a, const Word& b) {
    return words_equal_up_to_rotation(a, b) ||
           words_equal_up_to_rotation(a, word_inverse(b));
}

// Clearing monomial actually used for one raw module row, as a polynomial.
LaurentPoly<Int> clearing_monomial(const RingPtr& ring,
                                   const std::vector<LaurentPoly<Int>>& row) {
    return LaurentPoly<Int>::monomial(ring, row_clearing_exponents(row, ring->size()),
                                      Int(1));
}

TripusDemo checked_tripus(const std::string& fixtures, Checker& ck) {
    TripusDemo d = demo_tripus(fixtures);
    Json exp = load_json(fixtures + "/tripus/expected.json");
    const RingPtr& ring = d.main.module.ring;

    ck.check("Betti number 2 with basis a, c",
             d.main.ab.rank == 2 && d.main.ab.basis == json_strings(exp["basis"]));
    ck.check("two-relator presentation after script",
             d.main.working.gens == json_strings(exp["simplified_generators"]) &&
                 relators_match(d.main.working.relators, exp["main_relators"]));
    ck.check("three-relator presentation without the dropped relator",
             d.full.working.gens == json_strings(exp["simplified_generators"]) &&
                 relators_match(d.full.working.relators, exp["simplified_relators"]));
    ck.check("normalized generating set a, B, c, D",
             d.main.normalized.gens == json_strings(exp["normalized_generators"]) &&
                 relators_match(d.main.normalized.relators,
                                Json{exp["normalized_relators"][0],
                                     exp["normalized_relators"][1]}) &&
                 relators_match(d.full.normalized.relators, exp["normalized_relators"]));
    ck.check("module columns B, D, Theta",
             d.main.module.generators == json_strings(exp["module_generators"]));
    ck.check("raw rows of the 2-relator module",
             d.main.module.rows() == 2 && row_matches(d.main.module.m[0], ring, exp["raw_rows"][0]) &&
                 row_matches(d.main.module.m[1], ring, exp["raw_rows"][1]));
    ck.check("raw rows of the 3-relator module", matrix_matches(d.full.module, exp["raw_rows"]));
    ck.check("displayed 2 x 3 matrix", matrix_matches(d.main.display, exp["main_display_matrix"]));
    ck.check("displayed 3 x 3 matrix", matrix_matches(d.full.display, exp["display_matrix"]));
    {
        bool ok = true;
        for (std::size_t i = 0; i < d.full.module.rows(); ++i)
            ok = ok && clearing_monomial(ring, d.full.module.m[i]) ==
                           parse_poly(ring, exp["row_clearing_monomials"][i].get<std::string>());
        ck.check("row clearing monomials a*c, c, a*c", ok);
    }
    ck.check("scripted reduction reaches the final row",
             d.main.final_row.rows() == 1 &&
                 d.main.final_row.generators == json_strings(exp["final_generators"]) &&
                 matrix_matches(d.main.final_row, Json::array({exp["final_row"]})));
    ck.check("final entries have unit gcd",
             laurent_gcd(d.main.final_row.m[0][0], d.main.final_row.m[0][1]).is_unit());
    {
        ModulePresentation<Fp> want = module_mod_p(
            [&] {
                ModulePresentation<Int> w = d.main.final_row;
                w.m = {{parse_poly(ring, exp["final_row_mod2"][0].get<std::string>()),
                        parse_poly(ring, exp["final_row_mod2"][1].get<std::string>())}};
                return w;
            }(),
            2);
        ck.check("final row mod 2 is [a*c + a + 1, 0]",
                 d.final_mod2.rows() == 1 && d.final_mod2.m == want.m);
        ck.check("E_1 mod 2 is proper", ideal_is_proper(elementary_ideal(d.final_mod2, 1)));
    }
    ck.check("automatic reduction also reaches a single row with unit gcd",
             d.full.final_row.rows() == 1 && d.full.final_row.cols() == 2 &&
                 laurent_gcd(d.full.final_row.m[0][0], d.full.final_row.m[0][1]).is_unit());
    ck.check("elementary ideals E_0..E_2 agree between the two runs over Q",
             d.ideals_agree_q);
    {
        bool ok = true;
        for (const auto& [p, agree] : d.ideals_agree_p) ok = ok && agree;
        ck.check("elementary ideals E_0..E_2 agree mod 2, 3, 5", ok);
    }
    ck.check("matrix rank 2, module rank 1 on both runs",
             matrix_rank(d.main.module) == exp["matrix_rank"].get<std::size_t>() &&
                 matrix_rank(d.full.module) == exp["matrix_rank"].get<std::size_t>() &&
                 d.main.rank == exp["module_rank"].get<std::size_t>() &&
                 d.full.rank == exp["module_rank"].get<std::size_t>());
    ck.check("torsion-free with witness entries 0, 1",
             d.main.torsion.kind == TorsionVerdict::torsion_free &&
                 d.full.torsion.kind == TorsionVerdict::torsion_free &&
                 d.main.torsion.witness_i == exp["torsion"]["witness"][0].get<int>() &&
                 d.main.torsion.witness_j == exp["torsion"]["witness"][1].get<int>());
    ck.check("not free, witnessed mod 2",
             d.main.freeness.kind == FreenessVerdict::not_free &&
                 d.full.freeness.kind == FreenessVerdict::not_free &&
                 d.main.freeness.prime == exp["freeness"]["prime"].get<std::int64_t>() &&
                 d.full.freeness.prime == exp["freeness"]["prime"].get<std::int64_t>());
    ck.check("co-rank bounds 1 <= c <= 1 on both runs",
             d.main.report.bounds.lower == exp["bounds"]["lower"].get<int>() &&
                 d.main.report.bounds.upper &&
                 *d.main.report.bounds.upper == exp["bounds"]["upper"].get<int>() &&
                 d.full.report.bounds.lower == d.main.report.bounds.lower &&
                 d.full.report.bounds.upper == d.main.report.bounds.upper);
    ck.check("narrative records that the group is not very large",
             d.main.report.narrative.find("not very large") != std::string::npos);
    return d;
}

Genus3Demo checked_genus3(const std::string& fixtures, Checker& ck) {
    Genus3Demo d = demo_genus3(fixtures);
    Json exp = load_json(fixtures + "/genus3/expected.json");
    const RingPtr& ring = d.main.module.ring;

    {
        bool ok = d.main.pres_moves.size() == exp["trace"].size();
        for (std::size_t i = 0; ok && i < d.main.pres_moves.size(); ++i) {
            const PresMove& mv = d.main.pres_moves[i];
            ok = mv.kind == "eliminate" &&
                 mv.relator == exp["trace"][i][0].get<int>() &&
                 mv.gen == exp["trace"][i][1].get<std::string>();
        }
        ck.check("automatic simplification trace (10 eliminations)", ok);
    }
    ck.check("simplified to 5 generators and 2 relators",
             d.main.working.gens == json_strings(exp["simplified_generators"]) &&
                 relators_match(d.main.working.relators, exp["simplified_relators"]));
    {
        bool ok = d.main.working.relators.size() == 2;
        for (std::size_t i = 0; ok && i < 2; ++i)
            ok = same_up_to_rotation_or_inverse(
                d.main.working.relators[i],
                parse_word(exp["paper_relators"][i].get<std::string>()));
        ck.check("relators match the displayed pair up to rotation and inversion", ok);
    }
    ck.check("Betti number 3 with basis b, t, x",
             d.main.ab.rank == 3 && d.main.ab.basis == json_strings(exp["basis"]));
    {
        bool ok = true;
        for (const auto& [g, coords] : exp["images"].items()) {
            auto it = d.main.ab.images.find(g);
            ok = ok && it != d.main.ab.images.end() && it->second.size() == coords.size();
            for (std::size_t k = 0; ok && k < coords.size(); ++k)
                ok = it->second[k] == Int(coords[k].get<long>());
        }
        ck.check("abelianized images (f = b, w = x)", ok);
    }
    ck.check("Jacobian columns b, f, t, x, w",
             d.main.module.generators == json_strings(exp["module_generators"]));
    ck.check("raw Fox rows", matrix_matches(d.main.module, exp["raw_rows"]));
    {
        bool ok = true;
        for (std::size_t i = 0; i < d.main.module.rows(); ++i)
            ok = ok && clearing_monomial(ring, d.main.module.m[i]) ==
                           parse_poly(ring, exp["row_clearing_monomials"][i].get<std::string>());
        ck.check("row clearing monomials b*t and b*t*x", ok);
    }
    ck.check("displayed 2 x 5 Jacobian", matrix_matches(d.main.display, exp["display_matrix"]));
    ck.check("scripted reduction reaches the 1 x 4 row over b, f, t, x",
             d.main.reduced.rows() == 1 &&
                 d.main.reduced.generators == json_strings(exp["reduced_generators"]) &&
                 matrix_matches(d.main.reduced, Json::array({exp["reduced_row"]})));
    {
        bool ok = d.main.reduced.cols() == exp["reduced_display"].size();
        for (std::size_t j = 0; ok && j < d.main.reduced.cols(); ++j) {
            LaurentPoly<Int> stripped = strip_entry_monomial(d.main.reduced.m[0][j]);
            ok = stripped == parse_poly(ring, exp["reduced_display"][j].get<std::string>()) &&
                 exact_divide(d.main.reduced.m[0][j], stripped) ==
                     parse_poly(ring, exp["reduced_entry_units"][j].get<std::string>());
        }
        ck.check("per-entry units against the displayed reduced row", ok);
    }
    {
        const RingPtr& sring = d.main.final_row.ring;
        bool ok = *sring == json_strings(exp["substituted_ring"]) &&
                  matrix_matches(d.main.final_row, Json::array({exp["substituted_row"]}));
        for (std::size_t j = 0; ok && j < d.main.final_row.cols(); ++j) {
            LaurentPoly<Int> stripped = strip_entry_monomial(d.main.final_row.m[0][j]);
            ok = stripped ==
                     parse_poly(sring, exp["substituted_display"][j].get<std::string>()) &&
                 exact_divide(d.main.final_row.m[0][j], stripped) ==
                     parse_poly(sring, exp["substituted_entry_units"][j].get<std::string>());
        }
        ck.check("substitution b -> t reproduces the displayed 1 x 4 row", ok);
    }
    {
        const RingPtr& sring = d.main.final_row.ring;
        bool ok = true;
        for (const auto& item : exp["pairwise_gcds"]) {
            std::size_t i = item["pair"][0].get<std::size_t>();
            std::size_t j = item["pair"][1].get<std::size_t>();
            LaurentPoly<Int> g = laurent_gcd(d.main.final_row.m[0][i], d.main.final_row.m[0][j]);
            std::string want = item["gcd"].get<std::string>();
            ok = ok && (want == "1" ? g.is_unit()
                                    : equal_up_to_unit(g, parse_poly(sring, want)));
        }
        ck.check("pairwise gcds of the specialized entries (one pair shares t - 1)", ok);
    }
    ck.check("matrix rank 2, module rank 3",
             matrix_rank(d.main.module) == exp["matrix_rank"].get<std::size_t>() &&
                 d.main.rank == exp["module_rank"].get<std::size_t>());
    ck.check("torsion-free with witness entries 0, 1",
             d.main.torsion.kind == TorsionVerdict::torsion_free &&
                 d.main.torsion.witness_i == exp["torsion"]["witness"][0].get<int>() &&
                 d.main.torsion.witness_j == exp["torsion"]["witness"][1].get<int>());
    ck.check("not free, witnessed mod 3",
             d.main.freeness.kind == FreenessVerdict::not_free &&
                 d.main.freeness.prime == exp["freeness"]["prime"].get<std::int64_t>());
    {
        bool ok = true;
        for (const auto& p : exp["freeness"]["improper_primes"])
            ok = ok && !ideal_is_proper(elementary_ideal(
                           module_mod_p(d.main.module, p.get<std::int64_t>()), d.main.rank));
        ck.check("E_3 is the whole ring mod 2 (so 2 is not a witness)", ok);
    }
    ck.check("strand certificate gives the lower bound 2",
             d.main.cert_bounds && d.main.cert_bounds->lower == 2);
    ck.check("co-rank bounds 2 <= c <= 2",
             d.main.report.bounds.lower == exp["bounds"]["lower"].get<int>() &&
                 d.main.report.bounds.upper &&
                 *d.main.report.bounds.upper == exp["bounds"]["upper"].get<int>());
    ck.check("narrative pins the co-rank exactly",
             d.main.report.narrative.find("co-rank determined exactly: c = 2") !=
                 std::string::npos);
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology-module obstructions to free quotients of "
                 "finitely presented groups"};
    app.require_subcommand(1);

    // parse -------------------------------------------------------------------
    PresFlags parse_f;
    bool parse_json = false;
    auto* cmd_parse = app.add_subcommand("parse", "parse a presentation and echo it back");
    add_pres_flags(cmd_parse, parse_f);
    cmd_parse->add_flag("--json", parse_json, "emit JSON");
    cmd_parse->callback([&] {
        PresTrace trace;
        GroupPresentation p = prepare(parse_f, &trace);
        if (parse_json) {
            Json j = to_json(p);
            if (!trace.empty()) j["moves"] = to_json(trace);
            emit(j);
        } else {
            std::cout << presentation_to_dsl(p);
            if (!trace.empty())
                std::cout << "# " << trace.size() << " simplification moves applied\n";
        }
    });

    // abelianize ----------------------------------------------------------------
    PresFlags ab_f;
    std::vector<std::string> ab_basis;
    bool ab_json = false;
    auto* cmd_ab = app.add_subcommand("abelianize", "first homology of the group");
    add_pres_flags(cmd_ab, ab_f);
    cmd_ab->add_option("--basis", ab_basis, "generators whose images shall form the basis")
        ->delimiter(',');
    cmd_ab->add_flag("--json", ab_json, "emit JSON");
    cmd_ab->callback([&] {
        GroupPresentation p = prepare(ab_f);
        AbelianizationMap ab = abelianize(p, ab_basis);
        if (ab_json) {
            emit(to_json(ab));
            return;
        }
        std::cout << "free rank " << ab.rank << "\nbasis:";
        for (const auto& b : ab.basis) std::cout << " " << b;
        std::cout << "\n";
        for (const auto& g : p.gens) {
            std::cout << g << " ->";
            for (const auto& e : ab.images.at(g)) std::cout << " " << e;
            std::cout << "\n";
        }
    });

    // alexander -----------------------------------------------------------------
    PresFlags al_f;
    std::vector<std::string> al_basis;
    bool al_relative = false, al_absolute = false, al_norm = false, al_json = false;
    auto* cmd_al = app.add_subcommand(
        "alexander", "homology module of the universal free-abelian cover");
    add_pres_flags(cmd_al, al_f);
    cmd_al->add_option("--basis", al_basis, "requested homology basis")->delimiter(',');
    auto* rel_flag = cmd_al->add_flag("--relative", al_relative,
                                      "relative module: full Fox Jacobian");
    cmd_al->add_flag("--absolute", al_absolute,
                     "absolute module: null columns plus a commutator column")
        ->excludes(rel_flag);
    cmd_al->add_flag("--normalize-rows", al_norm, "clear negative exponents row by row");
    cmd_al->add_flag("--json", al_json, "emit JSON");
    cmd_al->callback([&] {
        require_input(al_relative || al_absolute, "choose --relative or --absolute");
        GroupPresentation p = prepare(al_f);
        AbelianizationMap ab = abelianize(p, al_basis);
        ModulePresentation<Int> mp;
        if (al_relative) {
            mp = relative_module(p, ab);
        } else {
            auto [np, nab] = normalize_generating_set(p, ab);
            mp = absolute_module(np, nab);
        }
        if (al_norm) mp = normalize_rows(mp);
        if (al_json)
            emit(module_to_json(mp));
        else
            std::cout << matrix_text(mp);
    });

    // reduce ----------------------------------------------------------------------
    std::string red_file, red_script_file;
    bool red_auto = false, red_json = false;
    auto* cmd_red = app.add_subcommand("reduce", "apply reduction moves to a module");
    cmd_red->add_option("file", red_file, "module JSON file")->required();
    auto* script_opt =
        cmd_red->add_option("--script", red_script_file, "JSON reduction script to replay");
    cmd_red->add_flag("--auto", red_auto, "use the automatic reducer")->excludes(script_opt);
    cmd_red->add_flag("--json", red_json, "emit JSON");
    cmd_red->callback([&] {
        require_input(red_auto || !red_script_file.empty(), "choose --script FILE or --auto");
        ModulePresentation<Int> mp = load_module(red_file);
        ReductionScript script;
        ModulePresentation<Int> out;
        if (red_auto) {
            AutoReduceResult<Int> r = auto_reduce(mp);
            script = r.script;
            out = r.reduced;
        } else {
            script = reduction_script_from_json(load_json(red_script_file));
            out = apply_reduction(mp, script);
        }
        if (red_json) {
            emit(Json{{"module", module_to_json(out)}, {"script", to_json(script)}});
            return;
        }
        std::cout << matrix_text(out);
        if (red_auto) std::cout << "# " << script.size() << " automatic moves\n";
    });

    // rank -------------------------------------------------------------------------
    std::string rank_file;
    bool rank_json = false;
    auto* cmd_rank = app.add_subcommand("rank", "matrix rank and module rank");
    cmd_rank->add_option("file", rank_file, "module JSON file")->required();
    cmd_rank->add_flag("--json", rank_json, "emit JSON");
    cmd_rank->callback([&] {
        ModulePresentation<Int> mp = load_module(rank_file);
        std::size_t mr = matrix_rank(mp);
        std::size_t rk = mp.cols() - mr;
        if (rank_json)
            emit(Json{{"matrix_rank", mr}, {"module_rank", rk}});
        else
            std::cout << "matrix rank " << mr << "\nmodule rank " << rk << "\n";
    });

    // torsion ------------------------------------------------------------------------
    std::string tor_file;
    bool tor_json = false;
    auto* cmd_tor = app.add_subcommand("torsion", "torsion test for a single-row module");
    cmd_tor->add_option("file", tor_file, "module JSON file")->required();
    cmd_tor->add_flag("--json", tor_json, "emit JSON");
    cmd_tor->callback([&] {
        TorsionVerdict v = torsion_verdict(load_module(tor_file));
        if (tor_json) {
            emit(to_json(v));
            return;
        }
        switch (v.kind) {
        case TorsionVerdict::torsion_free:
            std::cout << "torsion-free: entries " << v.witness_i << " and " << v.witness_j
                      << " have unit gcd\n";
            break;
        case TorsionVerdict::has_torsion:
            std::cout << "has torsion: common factor " << poly_to_string(v.common_factor)
                      << "\n";
            break;
        case TorsionVerdict::inconclusive:
            std::cout << "inconclusive\n";
            break;
        }
    });

    // freeness ------------------------------------------------------------------------
    std::string free_file;
    std::vector<std::int64_t> free_primes = {2, 3, 5};
    bool free_json = false;
    auto* cmd_free = app.add_subcommand("freeness", "one-sided freeness test mod small primes");
    cmd_free->add_option("file", free_file, "module JSON file")->required();
    cmd_free->add_option("--primes", free_primes, "primes to try")->delimiter(',');
    cmd_free->add_flag("--json", free_json, "emit JSON");
    cmd_free->callback([&] {
        ModulePresentation<Int> mp = load_module(free_file);
        std::size_t rk = mp.cols() - matrix_rank(mp);
        FreenessVerdict v = freeness_verdict(mp, rk, free_primes);
        if (free_json) {
            emit(to_json(v));
            return;
        }
        if (v.kind == FreenessVerdict::not_free)
            std::cout << "not free: E_" << rk << " mod " << v.prime << " is proper\n";
        else
            std::cout << "freeness undecided for the given primes\n";
    });

    // ideal ---------------------------------------------------------------------------
    std::string ideal_file;
    int ideal_index = 0;
    std::int64_t ideal_mod = 0;
    bool ideal_proper = false, ideal_json = false;
    auto* cmd_ideal = app.add_subcommand("ideal", "elementary ideal E_k of a module");
    cmd_ideal->add_option("file", ideal_file, "module JSON file")->required();
    cmd_ideal->add_option("--index", ideal_index, "k in E_k")->required();
    cmd_ideal->add_option("--mod", ideal_mod, "reduce coefficients modulo this prime");
    cmd_ideal->add_flag("--proper", ideal_proper,
                        "also decide properness (needs --mod, field coefficients)");
    cmd_ideal->add_flag("--json", ideal_json, "emit JSON");
    cmd_ideal->callback([&] {
        ModulePresentation<Int> mp = load_module(ideal_file);
        require_input(!ideal_proper || ideal_mod != 0,
                      "--proper needs --mod p (properness is decided over a field)");
        if (ideal_mod != 0) {
            PolyIdeal<Fp> ek = elementary_ideal(module_mod_p(mp, ideal_mod), ideal_index);
            bool proper = ideal_proper ? ideal_is_proper(ek) : false;
            if (ideal_json) {
                Json j = ideal_to_json(ek, ideal_mod);
                if (ideal_proper) j["proper"] = proper;
                emit(j);
                return;
            }
            std::cout << "E_" << ideal_index << " mod " << ideal_mod << ": "
                      << ek.gens.size() << " generators\n";
            for (const auto& g : ek.gens) std::cout << "  " << poly_to_string(g) << "\n";
            if (ideal_proper)
                std::cout << (proper ? "proper ideal\n" : "the whole ring\n");
        } else {
            PolyIdeal<Int> ek = elementary_ideal(mp, ideal_index);
            if (ideal_json) {
                emit(ideal_to_json(ek));
                return;
            }
            std::cout << "E_" << ideal_index << ": " << ek.gens.size() << " generators\n";
            for (const auto& g : ek.gens) std::cout << "  " << poly_to_string(g) << "\n";
        }
    });

    // certify-quotient -------------------------------------------------------------------
    std::string cert_pres_file, cert_file;
    bool cert_json = false;
    auto* cmd_cert =
        app.add_subcommand("certify-quotient", "verify a free-quotient certificate");
    cmd_cert->add_option("file", cert_pres_file, "presentation file")->required();
    cmd_cert->add_option("--cert", cert_file, "certificate JSON file")->required();
    cmd_cert->add_flag("--json", cert_json, "emit JSON");
    cmd_cert->callback([&] {
        GroupPresentation p = load_presentation(cert_pres_file);
        FreeQuotientCertificate c = certificate_from_json(load_json(cert_file));
        verify_free_quotient(p, c);
        if (cert_json)
            emit(Json{{"valid", true}, {"target_rank", c.target_rank}});
        else
            std::cout << "certificate valid: the group surjects onto a free group of rank "
                      << c.target_rank << "\n";
    });

    // obstruct -----------------------------------------------------------------------------
    PresFlags ob_f;
    std::vector<std::string> ob_basis, ob_subst;
    std::vector<std::int64_t> ob_primes = {2, 3, 5};
    std::string ob_reduction_file, ob_cert_file;
    bool ob_summand = false, ob_json = false;
    int ob_relative = -1;
    auto* cmd_ob = app.add_subcommand("obstruct", "run a full co-rank obstruction pipeline");
    add_pres_flags(cmd_ob, ob_f);
    auto* sflag = cmd_ob->add_flag("--summand", ob_summand,
                                   "absolute-module route (Betti number 2)");
    cmd_ob->add_option("--relative", ob_relative,
                       "relative-module route; value = expected Betti number")
        ->excludes(sflag);
    cmd_ob->add_option("--basis", ob_basis, "requested homology basis")->delimiter(',');
    cmd_ob->add_option("--reduction-script", ob_reduction_file,
                       "JSON reduction script (otherwise automatic)");
    cmd_ob->add_option("--substitute", ob_subst, "ring substitutions var=var")
        ->delimiter(',');
    cmd_ob->add_option("--primes", ob_primes, "primes for the freeness test")->delimiter(',');
    cmd_ob->add_option("--cert", ob_cert_file, "free-quotient certificate for the lower bound");
    cmd_ob->add_flag("--json", ob_json, "emit JSON");
    cmd_ob->callback([&] {
        require_input(ob_summand || ob_relative >= 0, "choose --summand or --relative N");
        GroupPresentation p = load_presentation(ob_f.file);
        PipelineOptions opt;
        opt.basis = ob_basis;
        if (!ob_f.pres_script_file.empty())
            opt.pres_script = pres_trace_from_json(load_json(ob_f.pres_script_file));
        opt.trust_redundant = ob_f.trust;
        opt.auto_simplify_first = ob_f.auto_simp;
        if (!ob_reduction_file.empty())
            opt.reduction = reduction_script_from_json(load_json(ob_reduction_file));
        opt.substitution = parse_substitutions(ob_subst);
        opt.primes = ob_primes;
        if (!ob_cert_file.empty())
            opt.certificate = certificate_from_json(load_json(ob_cert_file));
        ObstructionRun run = ob_summand ? obstruct_summand(p, opt)
                                        : obstruct_relative(p, opt, ob_relative);
        if (ob_json)
            emit(to_json(run.report));
        else
            std::cout << run.report.narrative;
    });

    // rg -------------------------------------------------------------------------------------
    long rg_g = 0;
    auto* cmd_rg = app.add_subcommand(
        "rg", "free-quotient rank threshold r(g) = ceil(g/2) for genus g");
    cmd_rg->add_option("genus", rg_g, "genus")->required();
    cmd_rg->callback([&] {
        require_input(rg_g >= 0, "genus must be non-negative");
        std::cout << r_of_g(rg_g) << "\n";
    });

    // combine ----------------------------------------------------------------------------------
    std::vector<std::string> comb_pieces;
    bool comb_json = false;
    auto* cmd_comb = app.add_subcommand(
        "combine", "add co-rank bounds of boundary-connected-sum pieces");
    cmd_comb->add_option("--piece", comb_pieces, "bounds as LOWER or LOWER:UPPER")
        ->required()
        ->delimiter(',');
    cmd_comb->add_flag("--json", comb_json, "emit JSON");
    cmd_comb->callback([&] {
        CorankBounds acc; // empty sum: co-rank exactly 0
        acc.upper = 0;
        for (const auto& s : comb_pieces) {
            CorankBounds b;
            std::size_t colon = s.find(':');
            try {
                if (colon == std::string::npos) {
                    b.lower = std::stoi(s);
                } else {
                    b.lower = std::stoi(s.substr(0, colon));
                    b.upper = std::stoi(s.substr(colon + 1));
                }
            } catch (const std::exception&) {
                throw input_error("--piece expects LOWER or LOWER:UPPER, got \"" + s + "\"");
            }
            require_input(!b.upper || b.lower <= *b.upper,
                          "piece bounds crossed in \"" + s + "\"");
            acc = combine_boundary_sum(acc, b);
        }
        if (comb_json) {
            emit(to_json(acc));
            return;
        }
        std::cout << acc.lower << " <= c";
        if (acc.upper) std::cout << " <= " << *acc.upper;
        std::cout << "\n";
    });

    // demo ---------------------------------------------------------------------------------------
    std::string demo_which;
    long demo_genus = 20;
    std::string demo_fixtures;
    bool demo_json = false;
    auto* cmd_demo = app.add_subcommand("demo", "replay a bundled worked example and "
                                                "assert its expected values");
    cmd_demo->add_option("which", demo_which, "tripus | genus3 | tower")
        ->required()
        ->check(CLI::IsMember({"tripus", "genus3", "tower"}));
    cmd_demo->add_option("genus", demo_genus, "maximal genus (tower only)");
    cmd_demo->add_option("--fixtures", demo_fixtures, "fixture directory override");
    cmd_demo->add_flag("--json", demo_json, "emit JSON");
    cmd_demo->callback([&] {
        const std::string fixtures = fixture_root(demo_fixtures);
        if (demo_which == "tower") {
            TowerDemo d = demo_tower(demo_genus);
            if (demo_json) {
                Json lines = Json::array();
                for (const auto& l : d.lines)
                    lines.push_back({{"genus", l.genus},
                                     {"decomposition", l.decomposition},
                                     {"bounds", to_json(l.bounds)},
                                     {"threshold", l.threshold},
                                     {"matches", l.matches}});
                emit(Json{{"lines", lines}, {"all_match", d.all_match}});
            } else {
                for (const auto& l : d.lines)
                    std::cout << "genus " << l.genus << ": " << l.decomposition
                              << " gives c = " << l.bounds.lower << ", threshold r(g) = "
                              << l.threshold << (l.matches ? "" : "  <-- MISMATCH") << "\n";
            }
            require_premise(d.all_match, "tower bounds do not all match the threshold");
            return;
        }
        Checker ck;
        Json report;
        if (demo_which == "tripus") {
            TripusDemo d = checked_tripus(fixtures, ck);
            report = Json{{"main", to_json(d.main.report)}, {"full", to_json(d.full.report)}};
        } else {
            Genus3Demo d = checked_genus3(fixtures, ck);
            report = to_json(d.main.report);
        }
        if (demo_json)
            emit(Json{{"checks", ck.to_json()}, {"report", report}});
        else
            ck.print(std::cout);
        require_premise(ck.all(), "demo assertions failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const premise_error& e) {
        std::cerr << "premise not met: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
