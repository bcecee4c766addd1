#pragma once

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/family.hpp"
#include "ringlab/report.hpp"
#include "ringlab/search.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::cli {

struct GlobalOptions {
    std::string format = "table";  // table | json | csv
    bool no_timing = false;
    int jobs = 0;
    long budget = 100;  // counterexample hit budget
};

namespace detail {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inline void footer(std::ostream& out, const GlobalOptions& g, const Timer& t) {
    if (!g.no_timing && g.format == "table")
        out << "elapsed: " << std::fixed << std::setprecision(1) << t.ms() << " ms\n";
}

inline std::string members_str(const Ideal& p) {
    std::string out = "{";
    auto mem = p.member_list();
    for (size_t k = 0; k < mem.size(); ++k) {
        if (k) out += ",";
        out += p.ring()->label(mem[k]);
    }
    return out + "}";
}

inline int run_ideals(const std::string& ring_text, const GlobalOptions& g, std::ostream& out) {
    Timer t;
    RingSpec spec = parse_ring_spec(ring_text);
    RingPtr ring = realize(spec);
    auto ideals = enumerate_ideals(ring);
    if (g.format == "json") {
        json j;
        j["ring"] = ring->spec_string();
        j["count"] = ideals.size();
        json arr = json::array();
        for (const auto& p : ideals) {
            json e = ideal_to_json(p);
            e.erase("ring");
            e["literal"] = ideal_literal(p);
            arr.push_back(std::move(e));
        }
        j["ideals"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        csv_row(out, {"index", "ideal", "size", "members"});
        for (size_t k = 0; k < ideals.size(); ++k)
            csv_row(out, {std::to_string(k), ideal_literal(ideals[k]),
                          std::to_string(ideals[k].count()), members_str(ideals[k])});
    } else {
        out << "ideals of " << ring->spec_string() << ": " << ideals.size() << "\n";
        for (size_t k = 0; k < ideals.size(); ++k)
            out << "  [" << k << "] " << ideal_literal(ideals[k]) << "  size "
                << ideals[k].count() << "  " << members_str(ideals[k]) << "\n";
    }
    footer(out, g, t);
    return 0;
}

inline int run_classify(const std::string& ring_text, const std::string& p_text,
                        const std::string& i_text, const GlobalOptions& g, std::ostream& out) {
    Timer t;
    RingSpec spec = parse_ring_spec(ring_text);
    RingPtr ring = realize(spec);
    Ideal p = parse_ideal_literal(p_text, spec, ring);
    Ideal i = parse_ideal_literal(i_text, spec, ring);
    ClassificationReport rep = classify(p, i);
    if (g.format == "json") {
        out << classification_to_json(rep).dump(2) << "\n";
    } else if (g.format == "csv") {
        csv_row(out, classification_csv_header());
        csv_row(out, classification_csv_row(rep));
    } else {
        auto row = [&](const std::string& k, const std::string& v) {
            out << "  " << std::left << std::setw(18) << k << " " << v << "\n";
        };
        auto wit = [&](const std::optional<PairWitness>& w) {
            return w ? "  witness (" + w->a_label + "," + w->b_label + ")" : std::string();
        };
        out << "classify " << rep.ring_spec << "  P=" << ideal_literal(p)
            << "  I=" << ideal_literal(i) << "\n";
        row("proper", bool_str(rep.proper));
        row("prime", bool_str(rep.prime) + wit(rep.prime_witness));
        row("weakly_prime", bool_str(rep.weakly_prime) + wit(rep.weakly_prime_witness));
        for (const auto& [n, v] : rep.almost_prime)
            row("almost_prime_" + std::to_string(n), bool_str(v));
        row("i_prime", bool_str(rep.i_prime) + wit(rep.i_prime_witness) +
                           (rep.vacuous ? "  (vacuous: P - IP is empty)" : ""));
        row("p_squared_zero", bool_str(rep.p_squared_zero));
        out << "  routes: definition=" << bool_str(rep.route_definition)
            << " quotient=" << bool_str(rep.route_quotient)
            << " colon_union=" << bool_str(rep.route_colon_union)
            << " colon_dichotomy=" << bool_str(rep.route_colon_dichotomy)
            << " ideal_pairs=" << bool_str(rep.route_ideal_pairs)
            << "  agree=" << bool_str(rep.routes_agree) << "\n";
    }
    footer(out, g, t);
    return 0;
}

inline int run_verify(const std::string& ids_text, const std::string& family_text,
                      const GlobalOptions& g, std::ostream& out) {
    Timer t;
    std::vector<TheoremId> ids;
    if (ids_text == "all") {
        for (const auto& [tid, name] : theorem_catalog()) ids.push_back(tid);
    } else {
        size_t start = 0;
        while (start <= ids_text.size()) {
            size_t comma = ids_text.find(',', start);
            std::string tok = ids_text.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!tok.empty()) {
                auto tid = theorem_from_name(tok);
                if (!tid) fail(ErrorKind::InvalidArgument, "unknown theorem id '" + tok + "'");
                ids.push_back(*tid);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (ids.empty()) fail(ErrorKind::InvalidArgument, "no theorem ids given");
    }

    auto family = parse_family(family_text);
    SweepOptions opt;
    opt.jobs = g.jobs;
    auto reports = run_sweeps(ids, family, family_text, opt);

    bool any_cex = false, any_note = false;
    if (g.format == "json") {
        json j;
        j["family"] = family_text;
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(theorem_report_to_json(r, !g.no_timing));
        j["reports"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        csv_row(out, {"id", "family", "instances", "passed", "counterexamples", "notes"});
        for (const auto& r : reports)
            csv_row(out, {theorem_name(r.id), r.family, std::to_string(r.instances),
                          bool_str(r.passed), std::to_string(r.counterexamples.size()),
                          std::to_string(r.notes.size())});
    }
    for (const auto& r : reports) {
        if (g.format == "table") {
            out << std::left << std::setw(10) << theorem_name(r.id) << " instances="
                << std::setw(8) << r.instances << (r.passed ? " PASS" : " FAIL")
                << (r.vacuous ? " (vacuous)" : "") << "\n";
            for (const auto& c : r.counterexamples)
                out << "    counterexample: ring=" << c.ring << " P=" << c.p << " I=" << c.i
                    << " — " << c.detail << "\n";
            for (const auto& n : r.notes) out << "    note: " << n << "\n";
        }
        any_cex = any_cex || !r.counterexamples.empty();
        any_note = any_note || !r.notes.empty();
    }
    footer(out, g, t);
    return any_cex ? 1 : (any_note ? 2 : 0);
}

inline int run_decompose(const std::string& ring_text, const std::string& p_text,
                         const std::string& i_text, const GlobalOptions& g, std::ostream& out) {
    Timer t;
    RingSpec spec = parse_ring_spec(ring_text);
    RingPtr ring = realize(spec);
    Ideal p = parse_ideal_literal(p_text, spec, ring);
    Ideal i = parse_ideal_literal(i_text, spec, ring);
    DecompositionWitness w = decompose(p, i);

    if (g.format == "json") {
        json j;
        j["ring"] = ring->spec_string();
        j["P"] = ideal_literal(p);
        j["I"] = ideal_literal(i);
        if (w.is_zero_prime) {
            j["verdict"] = "is_0_prime";
        } else {
            j["verdict"] = w.ok ? "decomposed" : "failed";
            j["idempotent"] = ring->label(w.idempotent);
            j["T_size"] = w.t->size();
            j["S_size"] = w.s->size();
            json tc = json::array(), sc = json::array();
            for (int x : w.t_carrier) tc.push_back(ring->label(x));
            for (int x : w.s_carrier) sc.push_back(ring->label(x));
            j["T_carrier"] = std::move(tc);
            j["S_carrier"] = std::move(sc);
            j["iso_verified"] = w.iso_verified;
            j["J"] = ideal_literal(*w.j);
            j["J_weakly_prime"] = w.j_weakly_prime;
            j["P_maps_to_JxS"] = w.p_maps_to_j_cross_s;
            if (!w.ok) j["failure"] = w.failure;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "decompose " << ring->spec_string() << "  P=" << ideal_literal(p)
            << "  I=" << ideal_literal(i) << "\n";
        if (w.is_zero_prime) {
            out << "  verdict: P is 0-prime (weakly prime); no splitting needed\n";
        } else {
            out << "  idempotent e = " << ring->label(w.idempotent) << "\n";
            out << "  T = R(1-e): size " << w.t->size() << "\n";
            out << "  S = Re:     size " << w.s->size() << "\n";
            out << "  isomorphism R -> T x S verified: " << bool_str(w.iso_verified) << "\n";
            out << "  J = image of P in T: " << ideal_literal(*w.j)
                << "  weakly prime: " << bool_str(w.j_weakly_prime) << "\n";
            out << "  P maps to J x S: " << bool_str(w.p_maps_to_j_cross_s) << "\n";
            if (!w.ok) out << "  FAILURE: " << w.failure << "\n";
        }
    }
    footer(out, g, t);
    return w.is_zero_prime || w.ok ? 0 : 1;
}

inline int run_counterexample(const std::string& expr, const std::string& family_text,
                              const GlobalOptions& g, std::ostream& out) {
    Timer t;
    auto family = parse_family(family_text);
    auto hits = search_counterexamples(expr, family, g.budget);
    if (g.format == "json") {
        json j;
        j["expression"] = expr;
        j["family"] = family_text;
        j["budget"] = g.budget;
        json arr = json::array();
        for (const auto& h : hits) arr.push_back({{"ring", h.ring}, {"P", h.p}, {"I", h.i}});
        j["hits"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        csv_row(out, {"ring", "P", "I"});
        for (const auto& h : hits) csv_row(out, {h.ring, h.p, h.i});
    } else {
        out << "search \"" << expr << "\" over " << family_text << ": " << hits.size()
            << " hit(s)\n";
        for (const auto& h : hits)
            out << "  ring=" << h.ring << " P=" << h.p << " I=" << h.i << "\n";
    }
    footer(out, g, t);
    return 0;
}

inline int run_localize(const std::string& ring_text, const std::string& set_text,
                        const std::string& p_text, const GlobalOptions& g, std::ostream& out) {
    Timer t;
    RingSpec spec = parse_ring_spec(ring_text);
    RingPtr ring = realize(spec);
    MultiplicativeSet s = parse_mult_set_literal(set_text, spec, ring);
    Localization loc = localize(ring, s);
    Ideal kernel = loc.kernel();

    std::vector<std::string> elem_labels;
    for (int x = 0; x < loc.ring->size(); ++x) elem_labels.push_back(loc.ring->label(x));

    if (g.format == "json") {
        json j;
        j["ring"] = ring->spec_string();
        json sl = json::array();
        for (int x : s.member_list()) sl.push_back(ring->label(x));
        j["set"] = std::move(sl);
        j["size"] = loc.ring->size();
        j["elements"] = elem_labels;
        j["kernel"] = ideal_to_json(kernel);
        if (!p_text.empty()) {
            Ideal p = parse_ideal_literal(p_text, spec, ring);
            Ideal lp = localize_ideal(p, loc);
            json e = ideal_to_json(lp);
            e["ring"] = "localization";
            json lbl = json::array();
            for (int x : lp.member_list()) lbl.push_back(loc.ring->label(x));
            e["member_labels"] = std::move(lbl);
            j["image"] = std::move(e);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "localize " << ring->spec_string() << " at {";
        auto mem = s.member_list();
        for (size_t k = 0; k < mem.size(); ++k)
            out << (k ? "," : "") << ring->label(mem[k]);
        out << "}\n";
        out << "  size " << loc.ring->size() << "\n";
        out << "  elements:";
        for (const auto& l : elem_labels) out << " " << l;
        out << "\n";
        out << "  hom kernel: " << ideal_literal(kernel) << " " << members_str(kernel) << "\n";
        if (!p_text.empty()) {
            Ideal p = parse_ideal_literal(p_text, spec, ring);
            Ideal lp = localize_ideal(p, loc);
            out << "  image of " << ideal_literal(p) << ":";
            for (int x : lp.member_list()) out << " " << loc.ring->label(x);
            out << "\n";
        }
    }
    footer(out, g, t);
    return 0;
}

}  // namespace detail

/// CLI entry point; argv excludes the program name. Writes results to `out`,
/// structured errors to `err`. Exit codes: 0 success, 1 counterexample found
/// by verify, 2 usage or operational error.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite commutative ring laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions g;
    long cap = 0;
    if (const char* env = std::getenv("RING_LAB_CAP")) cap = std::atol(env);

    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cap", cap, "ring size cap (overrides RING_LAB_CAP)");
    app.add_flag("--no-timing", g.no_timing, "suppress elapsed-time output");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0 = auto)");
    bool seed_order = true;
    app.add_flag("--seed-order", seed_order,
                 "deterministic instance ordering (default; the only mode)");

    std::string ring_text, p_text = "<0>", i_text = "<0>", set_text, ids_text = "all";
    std::string family_text = "F0", expr_text;

    auto* ideals_cmd = app.add_subcommand("ideals", "enumerate all ideals of a ring");
    ideals_cmd->add_option("ring", ring_text, "ring spec, e.g. Z12 or Z4xZ9")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "classify a (P, I) pair through every predicate");
    classify_cmd->add_option("ring", ring_text)->required();
    classify_cmd->add_option("--ideal", p_text, "the ideal P, e.g. \"<4>\"")->required();
    classify_cmd->add_option("--i", i_text, "the fixed ideal I (default <0>)");

    auto* verify_cmd = app.add_subcommand("verify", "sweep theorem checkers over a ring family");
    verify_cmd->add_option("ids", ids_text, "comma-separated theorem ids, or \"all\"");
    verify_cmd->add_option("--family", family_text, "family expression (default F0)");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "split R along the idempotent generator of P^2");
    decompose_cmd->add_option("ring", ring_text)->required();
    decompose_cmd->add_option("--ideal", p_text)->required();
    decompose_cmd->add_option("--i", i_text)->required();

    auto* cex_cmd = app.add_subcommand("counterexample", "search (ring, P, I) triples by flags");
    cex_cmd->add_option("expression", expr_text,
                        "flag expression, e.g. \"i_prime & !weakly_prime\"")
        ->required();
    cex_cmd->add_option("--family", family_text, "family expression (default F0)");
    cex_cmd->add_option("--budget", g.budget, "max hits to report")->capture_default_str();

    auto* localize_cmd = app.add_subcommand("localize", "build S^{-1}R and localize an ideal");
    localize_cmd->add_option("ring", ring_text)->required();
    localize_cmd->add_option("--set", set_text, "multiplicative set, e.g. \"{1,3,9}\"")
        ->required();
    localize_cmd->add_option("--ideal", p_text, "ideal to localize (optional)");
    std::string localize_p;
    localize_cmd->callback([&] { localize_p = localize_cmd->count("--ideal") ? p_text : ""; });

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    if (cap > 0) config::set_size_cap(static_cast<int>(cap));

    try {
        if (app.got_subcommand(ideals_cmd)) return detail::run_ideals(ring_text, g, out);
        if (app.got_subcommand(classify_cmd))
            return detail::run_classify(ring_text, p_text, i_text, g, out);
        if (app.got_subcommand(verify_cmd)) return detail::run_verify(ids_text, family_text, g, out);
        if (app.got_subcommand(decompose_cmd))
            return detail::run_decompose(ring_text, p_text, i_text, g, out);
        if (app.got_subcommand(cex_cmd))
            return detail::run_counterexample(expr_text, family_text, g, out);
        if (app.got_subcommand(localize_cmd))
            return detail::run_localize(ring_text, set_text, localize_p, g, out);
    } catch (const Error& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 2;
    }
    err << "error: usage: no subcommand\n";
    return 2;
}

}  // namespace ringlab::cli
