#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/ideal.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/primality.hpp"
#include "ringlab/search.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

using json = nlohmann::ordered_json;

inline json ideal_to_json(const Ideal& p) {
    json j;
    j["ring"] = p.ring()->spec_string();
    json gens = json::array();
    if (p.generators().empty()) {
        gens.push_back(p.ring()->label(p.ring()->zero()));
    } else {
        for (int g : p.generators()) gens.push_back(p.ring()->label(g));
    }
    j["generators"] = gens;
    j["members"] = p.member_list();
    return j;
}

inline json witness_to_json(const PairWitness& w) {
    json j;
    j["a"] = w.a_label;
    j["b"] = w.b_label;
    j["a_index"] = w.a;
    j["b_index"] = w.b;
    return j;
}

inline json classification_to_json(const ClassificationReport& r) {
    json j;
    j["ring"] = r.ring_spec;
    j["P"] = {{"generators", r.p_generators}, {"members", r.p_members}};
    j["I"] = {{"generators", r.i_generators}, {"members", r.i_members}};
    j["proper"] = r.proper;
    j["prime"] = r.prime;
    if (r.prime_witness) j["prime_witness"] = witness_to_json(*r.prime_witness);
    j["weakly_prime"] = r.weakly_prime;
    if (r.weakly_prime_witness)
        j["weakly_prime_witness"] = witness_to_json(*r.weakly_prime_witness);
    json ap;
    for (const auto& [n, v] : r.almost_prime) ap[std::to_string(n)] = v;
    j["almost_prime"] = ap;
    if (!r.almost_prime_witness.empty()) {
        json apw;
        for (const auto& [n, w] : r.almost_prime_witness) apw[std::to_string(n)] = witness_to_json(w);
        j["almost_prime_witness"] = apw;
    }
    j["i_prime"] = r.i_prime;
    j["vacuous"] = r.vacuous;
    if (r.i_prime_witness) j["i_prime_witness"] = witness_to_json(*r.i_prime_witness);
    j["p_squared_zero"] = r.p_squared_zero;
    j["i_prime_routes"] = {{"definition", r.route_definition},
                           {"quotient", r.route_quotient},
                           {"colon_union", r.route_colon_union},
                           {"colon_dichotomy", r.route_colon_dichotomy},
                           {"ideal_pairs", r.route_ideal_pairs}};
    j["routes_agree"] = r.routes_agree;
    return j;
}

inline json theorem_report_to_json(const TheoremReport& r, bool with_timing) {
    json j;
    j["id"] = theorem_name(r.id);
    j["family"] = r.family;
    j["instances"] = r.instances;
    j["passed"] = r.passed;
    if (r.vacuous) j["vacuous"] = true;
    json cex = json::array();
    for (const auto& c : r.counterexamples)
        cex.push_back({{"ring", c.ring}, {"P", c.p}, {"I", c.i}, {"detail", c.detail}});
    j["counterexamples"] = cex;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

// --- CSV (RFC 4180 quoting) -------------------------------------------------

inline std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) os << ',';
        os << csv_quote(cells[k]);
    }
    os << "\r\n";
}

inline std::string bool_str(bool v) { return v ? "true" : "false"; }

/// Flat row form of a classification (atlas output).
inline std::vector<std::string> classification_csv_header() {
    return {"ring",        "P",       "I",        "proper",          "prime",
            "weakly_prime", "almost_2", "almost_3", "almost_4",        "almost_5",
            "i_prime",     "vacuous", "p_squared_zero", "route_definition", "route_quotient",
            "route_colon_union", "route_colon_dichotomy", "route_ideal_pairs", "routes_agree",
            "witness"};
}

inline std::vector<std::string> classification_csv_row(const ClassificationReport& r) {
    auto join_gens = [](const std::vector<std::string>& gens) {
        std::string out = "<";
        for (size_t k = 0; k < gens.size(); ++k) {
            if (k) out += ",";
            out += gens[k];
        }
        return out + ">";
    };
    std::string witness;
    if (r.i_prime_witness)
        witness = "(" + r.i_prime_witness->a_label + "," + r.i_prime_witness->b_label + ")";
    else if (r.prime_witness)
        witness = "(" + r.prime_witness->a_label + "," + r.prime_witness->b_label + ")";
    return {r.ring_spec,
            join_gens(r.p_generators),
            join_gens(r.i_generators),
            bool_str(r.proper),
            bool_str(r.prime),
            bool_str(r.weakly_prime),
            bool_str(r.almost_prime.at(2)),
            bool_str(r.almost_prime.at(3)),
            bool_str(r.almost_prime.at(4)),
            bool_str(r.almost_prime.at(5)),
            bool_str(r.i_prime),
            bool_str(r.vacuous),
            bool_str(r.p_squared_zero),
            bool_str(r.route_definition),
            bool_str(r.route_quotient),
            bool_str(r.route_colon_union),
            bool_str(r.route_colon_dichotomy),
            bool_str(r.route_ideal_pairs),
            bool_str(r.routes_agree),
            witness};
}

}  // namespace ringlab
