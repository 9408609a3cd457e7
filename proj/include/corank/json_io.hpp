#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelianize.hpp"
#include "certificate.hpp"
#include "errors.hpp"
#include "laurent_text.hpp"
#include "matrix.hpp"
#include "module_ops.hpp"
#include "obstruction.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace corank {

using Json = nlohmann::json;

// ---- ring tags -------------------------------------------------------------

template <typename C> inline std::string ring_tag();
template <> inline std::string ring_tag<Int>() { return "integers"; }
template <> inline std::string ring_tag<Rat>() { return "rationals"; }

inline std::string ring_tag_mod(std::int64_t p) {
    return "prime-field(" + std::to_string(p) + ")";
}

// ---- presentations -----------------------------------------------------------

inline Json to_json(const GroupPresentation& p) {
    Json j;
    j["gens"] = p.gens;
    std::vector<std::string> rels;
    for (const Word& r : p.relators) rels.push_back(word_to_string(r));
    j["relators"] = rels;
    return j;
}

inline GroupPresentation presentation_from_json(const Json& j) {
    require_input(j.contains("gens") && j.contains("relators"),
                  "presentation JSON needs \"gens\" and \"relators\"");
    GroupPresentation p;
    for (const auto& g : j.at("gens")) p.gens.push_back(g.get<std::string>());
    for (const auto& r : j.at("relators")) p.relators.push_back(parse_word(r.get<std::string>()));
    p.validate();
    return p;
}

inline Json to_json(const PresTrace& trace) {
    Json arr = Json::array();
    for (const auto& mv : trace) {
        Json j;
        j["move"] = mv.kind;
        if (mv.relator >= 0) j["relator"] = mv.relator;
        if (!mv.gen.empty()) j["gen"] = mv.gen;
        if (!mv.detail.empty()) j["detail"] = mv.detail;
        arr.push_back(j);
    }
    return arr;
}

inline PresTrace pres_trace_from_json(const Json& arr) {
    PresTrace t;
    require_input(arr.is_array(), "presentation script must be a JSON array");
    for (const auto& j : arr) {
        PresMove mv;
        mv.kind = j.at("move").get<std::string>();
        if (j.contains("relator")) mv.relator = j.at("relator").get<int>();
        if (j.contains("gen")) mv.gen = j.at("gen").get<std::string>();
        if (j.contains("detail")) mv.detail = j.at("detail").get<std::string>();
        t.push_back(mv);
    }
    return t;
}

// ---- abelianization ----------------------------------------------------------

inline Json to_json(const AbelianizationMap& ab) {
    Json j;
    j["rank"] = ab.rank;
    j["basis"] = ab.basis;
    Json im = Json::object();
    for (const auto& [g, v] : ab.images) {
        std::vector<std::string> coords;
        for (const Int& c : v) coords.push_back(c.str());
        im[g] = coords;
    }
    j["images"] = im;
    return j;
}

// ---- modules -----------------------------------------------------------------

template <typename C>
inline Json module_to_json(const ModulePresentation<C>& mp) {
    Json j;
    j["ring"] = ring_tag<C>();
    j["variables"] = *mp.ring;
    j["generators"] = mp.generators;
    Json rows = Json::array();
    for (const auto& row : mp.m) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_to_string(p));
        rows.push_back(r);
    }
    j["matrix"] = rows;
    if (!mp.provenance.empty()) j["provenance"] = mp.provenance;
    return j;
}

inline Json module_to_json(const ModulePresentation<Fp>& mp, std::int64_t prime) {
    Json j;
    j["ring"] = ring_tag_mod(prime);
    j["variables"] = *mp.ring;
    j["generators"] = mp.generators;
    Json rows = Json::array();
    for (const auto& row : mp.m) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_to_string(p));
        rows.push_back(r);
    }
    j["matrix"] = rows;
    if (!mp.provenance.empty()) j["provenance"] = mp.provenance;
    return j;
}

inline ModulePresentation<Int> module_from_json(const Json& j) {
    require_input(j.contains("ring") && j.contains("variables") &&
                      j.contains("generators") && j.contains("matrix"),
                  "module JSON needs \"ring\", \"variables\", \"generators\", \"matrix\"");
    require_input(j.at("ring").get<std::string>() == ring_tag<Int>(),
                  "only integer-coefficient module files are supported, got ring \"" +
                  j.at("ring").get<std::string>() + "\"");
    ModulePresentation<Int> mp;
    VarList vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    mp.ring = make_ring(vars);
    for (const auto& g : j.at("generators")) mp.generators.push_back(g.get<std::string>());
    for (const auto& row : j.at("matrix")) {
        std::vector<LaurentPoly<Int>> r;
        for (const auto& e : row) r.push_back(parse_poly(mp.ring, e.get<std::string>()));
        require_input(r.size() == mp.generators.size(),
                      "module matrix row width does not match the generator count");
        mp.m.push_back(std::move(r));
    }
    if (j.contains("provenance"))
        for (const auto& s : j.at("provenance")) mp.provenance.push_back(s.get<std::string>());
    return mp;
}

// ---- reduction scripts ---------------------------------------------------------

inline Json to_json(const ReductionScript& script) {
    Json arr = Json::array();
    for (const auto& mv : script) {
        Json j;
        j["move"] = mv.move;
        if (mv.i >= 0) j["i"] = mv.i;
        if (mv.j >= 0) j["j"] = mv.j;
        if (!mv.poly.empty()) j["poly"] = mv.poly;
        arr.push_back(j);
    }
    return arr;
}

inline ReductionScript reduction_script_from_json(const Json& arr) {
    require_input(arr.is_array(), "reduction script must be a JSON array");
    ReductionScript s;
    for (const auto& j : arr) {
        ReductionMove mv;
        mv.move = j.at("move").get<std::string>();
        if (j.contains("i")) mv.i = j.at("i").get<int>();
        if (j.contains("j")) mv.j = j.at("j").get<int>();
        if (j.contains("poly")) mv.poly = j.at("poly").get<std::string>();
        s.push_back(mv);
    }
    return s;
}

// ---- certificates ----------------------------------------------------------------

inline Json to_json(const FreeQuotientCertificate& c) {
    Json j;
    j["target_rank"] = c.target_rank;
    Json im = Json::object();
    for (const auto& [g, w] : c.images) im[g] = word_to_string(w);
    j["images"] = im;
    j["witnesses"] = c.witnesses;
    return j;
}

inline FreeQuotientCertificate certificate_from_json(const Json& j) {
    require_input(j.contains("target_rank") && j.contains("images") && j.contains("witnesses"),
                  "certificate JSON needs \"target_rank\", \"images\", \"witnesses\"");
    FreeQuotientCertificate c;
    c.target_rank = j.at("target_rank").get<int>();
    for (const auto& [g, w] : j.at("images").items())
        c.images[g] = parse_word(w.get<std::string>());
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(w.get<std::string>());
    return c;
}

// ---- ideals and verdicts ------------------------------------------------------------

template <typename C>
inline Json ideal_to_json(const PolyIdeal<C>& ideal) {
    Json j;
    j["ring"] = ring_tag<C>();
    j["variables"] = *ideal.ring;
    std::vector<std::string> gens;
    for (const auto& g : ideal.gens) gens.push_back(poly_to_string(g));
    j["generators"] = gens;
    return j;
}

inline Json ideal_to_json(const PolyIdeal<Fp>& ideal, std::int64_t prime) {
    Json j;
    j["ring"] = ring_tag_mod(prime);
    j["variables"] = *ideal.ring;
    std::vector<std::string> gens;
    for (const auto& g : ideal.gens) gens.push_back(poly_to_string(g));
    j["generators"] = gens;
    return j;
}

inline Json to_json(const TorsionVerdict& v) {
    Json j;
    switch (v.kind) {
    case TorsionVerdict::torsion_free:
        j["verdict"] = "torsion_free";
        j["witness"] = {v.witness_i, v.witness_j};
        break;
    case TorsionVerdict::has_torsion:
        j["verdict"] = "has_torsion";
        j["common_factor"] = poly_to_string(v.common_factor);
        break;
    case TorsionVerdict::inconclusive:
        j["verdict"] = "inconclusive";
        break;
    }
    return j;
}

inline Json to_json(const FreenessVerdict& v) {
    Json j;
    if (v.kind == FreenessVerdict::not_free) {
        j["verdict"] = "not_free";
        j["prime"] = v.prime;
        j["ideal"] = ideal_to_json(v.witness_ideal, v.prime);
    } else {
        j["verdict"] = "free_unknown";
    }
    return j;
}

inline Json to_json(const CorankBounds& b) {
    Json j;
    j["lower"] = b.lower;
    if (b.upper)
        j["upper"] = *b.upper;
    else
        j["upper"] = nullptr;
    return j;
}

inline CorankBounds bounds_from_json(const Json& j) {
    CorankBounds b;
    b.lower = j.at("lower").get<long>();
    if (j.contains("upper") && !j.at("upper").is_null()) b.upper = j.at("upper").get<long>();
    return b;
}

inline Json to_json(const ObstructionReport& r) {
    Json j;
    j["source"] = r.source;
    j["betti"] = r.betti;
    j["lemma"] = r.lemma;
    j["rank"] = r.rank;
    j["torsion"] = to_json(r.torsion);
    j["freeness"] = to_json(r.freeness);
    j["bounds"] = to_json(r.bounds);
    j["narrative"] = r.narrative;
    Json scripts = Json::object();
    for (const auto& [name, s] : r.scripts) scripts[name] = to_json(s);
    j["scripts"] = scripts;
    return j;
}

} // namespace corank
