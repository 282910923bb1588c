#pragma once
// Command line front end. run_cli returns 0 when every item succeeded and
// every check held, 1 on a failed check or an exhausted budget, 2 on bad input.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "knotpos/knotpos.hpp"
#include "knotpos/verify.hpp"

#ifndef KNOTPOS_DATA_DIR
#define KNOTPOS_DATA_DIR "data"
#endif

namespace knotpos::cli {

enum Exit { Ok = 0, CheckFailed = 1, InputError = 2 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string input_file, table_file;
    std::string format = "auto";
    int skein_budget = 16;
    long braid_budget = 2'000'000;
    bool json = false;
    std::uint64_t seed = 1;
    // subcommand options
    std::string to = "pd";
    int sign = 1;
    bool loops = false, decide = false, emit = false;
    int corpus = 500, braids = 100, vogel = 100;
    std::string fixtures = std::string(KNOTPOS_DATA_DIR) + "/knots.txt";
    std::string fault;
};

inline int default_skein_budget() {
    if (const char* e = std::getenv("KNOTPOS_SKEIN_BUDGET")) {
        try {
            int v = std::stoi(e);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 16;
}

struct Item {
    std::string label;
    std::string text;
    Format format = Format::DT;
    bool mirrored = false;
    std::string error;  // input error found while reading
};

inline std::vector<Item> collect_inputs(const RunConfig& cfg) {
    std::vector<Item> items;
    auto fmt = [&](const std::string& text) {
        return cfg.format == "auto" ? detect_format(text) : parse_format(cfg.format);
    };
    auto add = [&](std::string label, std::string text) {
        Item it{std::move(label), text};
        try {
            it.format = fmt(text);
        } catch (const std::exception& e) {
            it.error = e.what();
        }
        items.push_back(std::move(it));
    };
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) add("arg" + std::to_string(i + 1), cfg.inputs[i]);
    if (!cfg.input_file.empty()) {
        std::ifstream in(cfg.input_file);
        if (!in) throw std::runtime_error("cannot open " + cfg.input_file);
        std::string line;
        for (int n = 1; std::getline(in, line); ++n) {
            auto body = line.substr(0, line.find('#'));
            if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
            add(cfg.input_file + ":" + std::to_string(n), body);
        }
    }
    if (!cfg.table_file.empty())
        for (auto& e : load_table(cfg.table_file)) {
            Item it{e.name, e.text, Format::DT, e.mirrored, e.error};
            if (it.error.empty()) it.format = detect_format(e.text);
            if (!it.error.empty()) it.error = cfg.table_file + ":" + std::to_string(e.line) + ": " + it.error;
            items.push_back(std::move(it));
        }
    return items;
}

// ------------------------------------------------------------ output

inline std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// key=value lines; arrays of records go one record per line
inline void print_human(std::ostream& os, const json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            os << indent << it.key() << ":\n";
            print_human(os, v, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << indent << it.key() << ":\n";
            for (auto& rec : v) {
                os << indent << "  -";
                for (auto f = rec.begin(); f != rec.end(); ++f)
                    if (!f.value().is_structured()) os << ' ' << f.key() << '=' << scalar(f.value());
                os << '\n';
            }
        } else if (v.is_array()) {
            os << indent << it.key() << '=';
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << scalar(v[i]);
            os << '\n';
        } else {
            os << indent << it.key() << '=' << scalar(v) << '\n';
        }
    }
}

// ------------------------------------------------------------ commands

struct Outcome {
    json data;
    int status = Ok;
};

inline Outcome cmd_invariants(const RunConfig& cfg, const PlanarDiagram& d) {
    auto k = compute_invariants(d, cfg.skein_budget);
    json j = to_json(k);
    j["seifert"] = to_json(seifert_decomposition(d));
    return {j, Ok};
}

inline Outcome cmd_positivity(const RunConfig& cfg, const PlanarDiagram& d) {
    auto k = compute_invariants(d, cfg.skein_budget);
    auto r = braid_positivity_obstructions(k);
    json j = to_json(r);
    if (cfg.decide) {
        auto dec = decide_braid_positive(d, cfg.braid_budget, cfg.skein_budget);
        j["braid_positive"] = answer_name(dec.answer);
        j["witness"] = dec.witness ? json(serialize(*dec.witness)) : json(nullptr);
        j["words_tried"] = dec.words_tried;
        if (dec.answer == BraidDecision::Answer::Unknown) return {j, CheckFailed};
    }
    return {j, Ok};
}

inline Outcome cmd_braid(const RunConfig&, const PlanarDiagram& d) {
    auto v = vogel_braiding(d);
    json j;
    j["braid"] = serialize(v.braid);
    j["vogel_moves"] = v.moves;
    j["writhe"] = v.braid.exponent_sum();
    j["seifert_circles"] = v.braid.strands;
    int status = Ok;
    if (jones(braid_closure(v.braid)) != jones(d)) {
        j["error"] = "braided diagram has a different Jones polynomial";
        status = CheckFailed;
    }
    if (v.braid.positive() && v.braid.closure_components() == 1) {
        auto red = markov_reduce_positive(v.braid);
        j["markov_reduced"] = serialize(red);
        auto b = braid_bounds(red);
        j["bounds"] = {{"min_deg_v", to_str(b.min_deg_v)},
                       {"fiedler", to_str(b.fiedler)},
                       {"v2_lower", to_str(b.v2_bound)}};
    }
    if (component_count(d) == 1) j["signature"] = seifert_signature(v.braid, false).signature;
    return {j, status};
}

inline Outcome cmd_moves(const RunConfig& cfg, const PlanarDiagram& d) {
    auto g = to_gauss(d);
    json j;
    auto red = reduce_diagram(g);
    j["crossings"] = g.arrow_count();
    j["reduced_crossings"] = red.result.arrow_count();
    auto st = reduction_status(red.result);
    j["bireduced"] = st.bireduced;
    j["composite"] = st.composite;
    j["loop_minimal"] = st.loop_minimal;
    j["reduction"] = to_json(red.trace);
    int status = Ok;
    if (cfg.loops) {
        if (!g.positive()) {
            j["loops"] = "skipped: loop trivialization needs a positive diagram";
        } else {
            auto t = trivialize_by_loops(g);
            bool ledger = true;
            for (auto& m : t.trace.moves)
                if (m.kind == MoveRecord::Kind::Loop && !m.unknots_component) ledger = ledger && loop_ledger_holds(m);
            j["loops"] = {{"v2", to_json(t.v2)},
                          {"reduced_crossings", t.reduced_crossings},
                          {"total_switches", t.total_switches},
                          {"canonical_genus", t.canonical_genus},
                          {"ledger_holds", ledger},
                          {"trace", to_json(t.trace)}};
            if (!ledger) status = CheckFailed;
        }
    }
    return {j, status};
}

inline Outcome cmd_double(const RunConfig& cfg, const PlanarDiagram& d) {
    auto w = whitehead_double(d, cfg.sign);
    auto g = to_gauss(w), base = to_gauss(d);
    Int v2 = v2_unchecked(base), wv2 = v2_unchecked(g), wv3 = v3_unchecked(g);
    json j;
    j["clasp"] = cfg.sign > 0 ? "+" : "-";
    j["crossings"] = w.crossing_count();
    j["v2_knot"] = to_json(v2);
    j["v2_double"] = to_json(wv2);
    j["v3_double"] = to_json(wv3);
    bool ok = wv2 == 0 && wv3 == 8 * cfg.sign * v2;
    j["check_v3_is_8v2"] = ok;
    if (cfg.emit) j["pd"] = serialize(w);
    return {j, ok ? Ok : CheckFailed};
}

inline Outcome cmd_convert(const RunConfig& cfg, const Item& item) {
    auto p = parse_diagram(item.format, item.text);
    json j;
    auto to = parse_format(cfg.to);
    if (to == Format::CONWAY) throw SemanticError("conversion to Conway notation is not supported");
    if (to == item.format && !item.mirrored) {
        j["output"] = p.pd ? serialize(*p.pd)
                      : p.gauss ? serialize(*p.gauss)
                      : p.braid ? serialize(*p.braid)
                      : p.conway ? serialize(*p.conway)
                                 : serialize_dt(p.dt);
        if (to == Format::DT) j["output"] = serialize_dt(p.dt);
    } else {
        auto d = to_planar(p);
        if (item.mirrored) d = mirror(d);
        switch (to) {
            case Format::PD: j["output"] = serialize(d); break;
            case Format::DT: j["output"] = serialize_dt(to_dt(d)); break;
            case Format::GAUSS: j["output"] = serialize(to_gauss_code(d)); break;
            case Format::BRAID: j["output"] = serialize(vogel_braiding(d).braid); break;
            case Format::CONWAY: break;
        }
    }
    j["format"] = format_name(to);
    return {j, Ok};
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    VerifyConfig vc;
    vc.seed = cfg.seed;
    vc.corpus = cfg.corpus;
    vc.braids = cfg.braids;
    vc.vogel = cfg.vogel;
    vc.skein_budget = cfg.skein_budget;
    if (!cfg.fault.empty()) {
        if (cfg.fault != "v3-sign") {
            err << "error: unknown fault '" << cfg.fault << "'\n";
            return InputError;
        }
        vc.fault_v3_sign = true;
    }
    try {
        if (!cfg.fixtures.empty()) vc.fixtures = load_table(cfg.fixtures);
        if (!cfg.table_file.empty())
            for (auto& e : load_table(cfg.table_file)) vc.fixtures.push_back(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
    auto s = verify_suite(vc);
    if (cfg.json) {
        out << to_json(s).dump(2) << '\n';
    } else {
        for (auto& p : s.properties) {
            out << (p.ok() ? "pass " : "FAIL ") << p.module << '/' << p.name << "  " << p.checked - p.failed << '/'
                << p.checked;
            if (!p.ok()) out << "  first counterexample: " << p.counterexample;
            out << '\n';
        }
        out << (s.ok() ? "all properties hold" : std::to_string(s.failures()) + " failures") << '\n';
    }
    return s.ok() ? Ok : CheckFailed;
}

// Runs one command over every input, isolating failures per item.
inline int run_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Item> items;
    try {
        items = collect_inputs(cfg);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
    if (items.empty()) {
        err << "error: no input given\n";
        return InputError;
    }
    int status = Ok;
    json results = json::array();
    for (auto& item : items) {
        json rec;
        rec["input"] = item.label;
        Outcome o;
        try {
            if (!item.error.empty()) throw ParseError(item.error, 0);
            if (cfg.command == "convert") {
                o = cmd_convert(cfg, item);
            } else {
                auto d = parse_planar(item.format, item.text);
                if (item.mirrored) d = mirror(d);
                if (cfg.command == "invariants") o = cmd_invariants(cfg, d);
                else if (cfg.command == "positivity") o = cmd_positivity(cfg, d);
                else if (cfg.command == "braid") o = cmd_braid(cfg, d);
                else if (cfg.command == "moves") o = cmd_moves(cfg, d);
                else if (cfg.command == "double") o = cmd_double(cfg, d);
            }
            rec["status"] = o.status == Ok ? "ok" : "check-failed";
        } catch (const BudgetExceeded& e) {
            o.status = CheckFailed;
            rec["status"] = "budget-exceeded";
            rec["error"] = e.what();
        } catch (const ParseError& e) {
            o.status = InputError;
            rec["status"] = "input-error";
            rec["error"] = e.what();
        } catch (const SemanticError& e) {
            o.status = InputError;
            rec["status"] = "input-error";
            rec["error"] = e.what();
        } catch (const std::exception& e) {
            o.status = CheckFailed;
            rec["status"] = "internal-error";
            rec["error"] = e.what();
        }
        if (!o.data.is_null()) rec["result"] = o.data;
        status = std::max(status, o.status);
        if (cfg.json) {
            results.push_back(rec);
        } else {
            out << "== " << item.label << " [" << rec["status"].get<std::string>() << "]\n";
            if (rec.contains("error")) err << item.label << ": " << rec["error"].get<std::string>() << '\n';
            if (!o.data.is_null()) print_human(out, o.data, "  ");
        }
    }
    if (cfg.json) out << json{{"command", cfg.command}, {"results", results}}.dump(2) << '\n';
    return status;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    RunConfig cfg;
    cfg.skein_budget = default_skein_budget();
    CLI::App app{"knotpos: Vassiliev invariants, polynomials and positivity obstructions for knot diagrams"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sc, bool with_inputs) {
        if (with_inputs) {
            sc->add_option("inputs", cfg.inputs, "Presentations (PD, DT, Gauss, braid 'n: ...', Conway 'C: ...')");
            sc->add_option("--format,-f", cfg.format, "Input format")
                ->check(CLI::IsMember({"auto", "pd", "dt", "gauss", "braid", "conway"}, CLI::ignore_case));
            sc->add_option("--input,-i", cfg.input_file, "File with one presentation per line")->check(CLI::ExistingFile);
        }
        sc->add_option("--table", cfg.table_file, "Knot table: name and presentation per line")->check(CLI::ExistingFile);
        sc->add_option("--skein-budget", cfg.skein_budget, "Largest crossing count for HOMFLY skein computation")
            ->check(CLI::PositiveNumber);
        sc->add_flag("--json", cfg.json, "JSON output");
    };
    auto* inv = app.add_subcommand("invariants", "v2, v3, Jones, HOMFLY, Conway, Alexander, signature, Seifert data");
    common(inv, true);
    auto* pos = app.add_subcommand("positivity", "Positivity and braid positivity obstruction report");
    common(pos, true);
    pos->add_flag("--decide", cfg.decide, "Also search for a positive braid word");
    pos->add_option("--braid-budget", cfg.braid_budget, "Words tried by the braid search")->check(CLI::PositiveNumber);
    auto* br = app.add_subcommand("braid", "Vogel braiding, Markov reduction and braid bounds");
    common(br, true);
    auto* mv = app.add_subcommand("moves", "Reduction and loop-move trivialization traces");
    common(mv, true);
    mv->add_flag("--loops", cfg.loops, "Trivialize a positive diagram by loop moves");
    auto* db = app.add_subcommand("double", "Whitehead double with the v3 = +-8 v2 check");
    common(db, true);
    db->add_option("--sign", cfg.sign, "Clasp sign")->check(CLI::IsMember({1, -1}));
    db->add_flag("--emit", cfg.emit, "Print the PD code of the double");
    auto* ver = app.add_subcommand("verify", "Property suites over fixtures and generated diagrams");
    common(ver, false);
    ver->add_option("--seed", cfg.seed, "Random seed");
    ver->add_option("--corpus", cfg.corpus, "Generated positive diagrams")->check(CLI::NonNegativeNumber);
    ver->add_option("--braids", cfg.braids, "Random positive braids")->check(CLI::NonNegativeNumber);
    ver->add_option("--vogel", cfg.vogel, "Random diagrams for Vogel braiding")->check(CLI::NonNegativeNumber);
    ver->add_option("--fixtures", cfg.fixtures, "Fixture table (empty string for none)");
    ver->add_option("--inject-fault", cfg.fault, "Test harness fault: v3-sign");
    auto* cv = app.add_subcommand("convert", "Format conversion");
    common(cv, true);
    cv->add_option("--to", cfg.to, "Output format")
        ->check(CLI::IsMember({"pd", "dt", "gauss", "braid"}, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }
    for (auto* sc : app.get_subcommands()) cfg.command = sc->get_name();
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    return run_batch(cfg, out, err);
}

}  // namespace knotpos::cli
