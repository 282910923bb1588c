// Acceptance run: one PASS/FAIL/SKIP line per criterion.
//   acceptance [--table FILE] [--seed N]
// Exit status is 0 when no criterion failed. Skipped criteria do not fail.

#include <chrono>
#include <cstring>
#include <iostream>

#include "knotpos/knotpos.hpp"
#include "knotpos/verify.hpp"

using namespace knotpos;

namespace {

struct Line {
    int id;
    std::string status;  // PASS, FAIL, SKIP
    std::string detail;
};

std::vector<Line> lines;
int failed = 0;

void report(int id, bool pass, const std::string& detail) {
    lines.push_back({id, pass ? "PASS" : "FAIL", detail});
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << detail << std::endl;
}

void skip(int id, const std::string& why) {
    lines.push_back({id, "SKIP", why});
    std::cout << "SKIP  criterion " << id << ": " << why << std::endl;
}

// checked counts and first counterexample of the named properties
std::string summarize(const VerifySummary& s, const std::vector<std::string>& names) {
    std::string out;
    for (auto& n : names) {
        auto* p = s.find(n);
        if (!p) {
            out += " " + n + "=missing";
            continue;
        }
        out += " " + n + "=" + std::to_string(p->checked - p->failed) + "/" + std::to_string(p->checked);
        if (!p->ok()) out += " [" + p->counterexample + "]";
    }
    return out;
}

long checked(const VerifySummary& s, const std::string& name) {
    auto* p = s.find(name);
    return p ? p->checked : 0;
}

Laurent2 poly2(std::initializer_list<std::array<int, 3>> terms) {
    Laurent2 p;
    for (auto& [a, b, k] : terms) p.add_term(a, b, k);
    return p;
}

// P(l, m) of the mirror image: l -> l^-1
Laurent2 mirror_homfly(const Laurent2& P) {
    Laurent2 r;
    for (auto& [e, k] : P.c) r.add_term(-e.first, e.second, k);
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const PlanarDiagram* lookup(const std::vector<TableEntry>& t, const std::string& name) {
    auto* e = find_entry(t, name);
    return e && e->diagram ? &*e->diagram : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    std::string table_path;
    std::uint64_t seed = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--table") && i + 1 < argc) table_path = argv[++i];
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--table FILE] [--seed N]\n";
            return 2;
        }
    }
    auto t0 = std::chrono::steady_clock::now();

    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.fixtures = load_table(std::string(KNOTPOS_DATA_DIR) + "/knots.txt");
    std::vector<TableEntry> table;
    if (!table_path.empty()) table = load_table(table_path);
    auto fixture = [&](const std::string& name) -> PlanarDiagram {
        auto* d = lookup(cfg.fixtures, name);
        if (!d) throw std::runtime_error("missing fixture " + name);
        return *d;
    };

    // 1. Gauss-sum anchors
    {
        auto v2 = [&](const char* n) { return v2_gauss(to_gauss(fixture(n))); };
        auto v3 = [&](const char* n) { return v3_gauss(to_gauss(fixture(n))); };
        Int a = v3("!3_1"), b = v3("3_1"), c = v3("6_2"), d = v2("5_1"), e = v2("!5_2");
        bool ok = a == 4 && b == -4 && c == 4 && d == 3 && e == 2;
        report(1, ok,
               "v3(!3_1)=" + a.str() + " v3(3_1)=" + b.str() + " v3(6_2)=" + c.str() + " v2(5_1)=" + d.str() +
                   " v2(5_2)=" + e.str() + " (exact)");
    }

    // 2. identity suite on fixtures and perturbations
    {
        VerifySummary s;
        verify_fixtures(cfg, s);
        long n = checked(s, "v3-equals-jones");
        std::vector<std::string> names{"v2-equals-jones", "v2-equals-alexander", "v3-equals-jones"};
        report(2, s.ok(names) && n >= 50, std::to_string(n) + " diagrams (need >= 50);" + summarize(s, names));
    }

    // 3. HOMFLY goldens, table-gated
    std::map<std::string, PlanarDiagram> gated;  // chirality matched to the golden
    {
        const std::vector<std::pair<std::string, Laurent2>> goldens{
            {"12_2038", poly2({{6, 0, -7}, {8, 0, -9}, {10, 0, -3},
                               {6, 2, 13}, {8, 2, 13}, {10, 2, 3},
                               {6, 4, -7}, {8, 4, -6}, {10, 4, -1},
                               {6, 6, 1}, {8, 6, 1}})},
            {"!12_1930", poly2({{8, 0, 4}, {10, 0, 2}, {12, 0, -1},
                                {4, 2, -4}, {6, 2, 2}, {8, 2, -4}, {10, 2, 1},
                                {4, 4, 1}})},
        };
        if (table.empty()) {
            skip(3, "no knot table given (pass --table FILE or configure with -DKNOTPOS_TABLE=FILE); "
                    "12-crossing HOMFLY goldens not checked");
        } else {
            bool ok = true;
            std::string detail;
            for (auto& [name, want] : goldens) {
                std::string base = name[0] == '!' ? name.substr(1) : name;
                const PlanarDiagram* d = lookup(table, name);
                bool mirrored = false;
                if (!d && (d = lookup(table, base))) mirrored = name[0] == '!';
                if (!d) {
                    ok = false;
                    detail += " " + name + "=absent";
                    continue;
                }
                PlanarDiagram k = mirrored ? mirror(*d) : *d;
                auto P = homfly(k, 16);
                std::string how = "exact";
                if (P != want && mirror_homfly(P) == want) {
                    // table chirality differs from the printed one
                    k = mirror(k);
                    P = mirror_homfly(P);
                    how = "after mirroring the table diagram";
                }
                gated[name] = k;
                bool match = P == want;
                ok = ok && match;
                detail += " " + name + (match ? " matches (" + how + ")" : " got " + P.str());
            }
            report(3, ok, "HOMFLY goldens from " + table_path + ":" + detail);
        }
    }

    auto tc = std::chrono::steady_clock::now();
    VerifySummary corpus;
    verify_corpus(cfg, corpus);
    double corpus_time = seconds_since(tc);

    // 4. positive-diagram inequalities
    {
        std::vector<std::string> names{"v3-at-least-c",      "v3-bireduced-noncomposite", "v2-at-least-c/4",
                                       "c-at-least-2v2^2/(v3-v2)", "3v3/4-at-most-v2c", "v3-at-least-4g",
                                       "v2-at-least-g",      "lk-at-least-3g",            "5v2-at-least-maxdegV",
                                       "3v3-at-least-8v2",   "v3-at-least-2maxdegmP",     "corpus-all-positive"};
        long n = checked(corpus, "corpus-all-positive");
        report(4, corpus.ok(names) && n >= 500,
               std::to_string(n) + " positive diagrams, " + std::to_string(cfg.lo) + ".." + std::to_string(cfg.hi) +
                   " crossings;" + summarize(corpus, names));
    }

    // 5. loop moves
    {
        std::vector<std::string> names{"5v2-at-least-c-plus-switches", "switches-at-least-g", "loop-ledger"};
        bool ok = corpus.ok(names) && corpus.ok({"loop-drop-at-least-k/4+c/2"}) &&
                  !corpus.find("loop-trivialization-completes");
        report(5, ok, summarize(corpus, names) + summarize(corpus, {"loop-drop-at-least-k/4+c/2"}));
    }

    // 6. braids
    {
        VerifySummary s;
        verify_braids(cfg, s);
        std::vector<std::string> names{"braid-min-deg-V", "braid-min-cf-V", "braid-v2-bound"};
        long n = checked(s, "braid-min-deg-V");
        report(6, s.ok(names) && n >= 100, std::to_string(n) + " positive braids;" + summarize(s, names));
    }

    // 7. Vogel
    {
        VerifySummary s;
        verify_vogel(cfg, s);
        std::vector<std::string> names{"vogel-output-is-braid-closure", "vogel-keeps-writhe", "vogel-keeps-circles",
                                       "vogel-keeps-jones"};
        long n = checked(s, "vogel-keeps-jones");
        report(7, s.ok(names) && n >= 100, std::to_string(n) + " diagrams;" + summarize(s, names));
    }

    // 8. obstruction verdicts
    {
        bool ok = true;
        std::string detail;
        auto expect = [&](const std::string& name, const PlanarDiagram& d, bool want_not_positive) {
            auto o = braid_positivity_obstructions(compute_invariants(d)).overall;
            // not-positive implies not-braid-positive
            bool hit = want_not_positive ? o == Overall::NotPositive : o != Overall::Consistent;
            ok = ok && hit;
            detail += " " + name + "=" + overall_name(o) + (hit ? "" : "(expected " +
                                                                       std::string(want_not_positive
                                                                                       ? "not-positive"
                                                                                       : "not-braid-positive") +
                                                                       ")");
        };
        for (auto n : {"4_1", "6_3", "6_2"}) expect(n, fixture(n), true);
        for (auto n : {"!5_2", "!7_2", "7_4", "7_3", "!7_5", "!10_2"}) expect(n, fixture(n), false);
        if (gated.count("12_2038")) expect("12_2038", gated["12_2038"], true);
        if (gated.count("!12_1930")) expect("!12_1930", gated["!12_1930"], false);
        if (gated.size() < 2) detail += " (12_2038 and !12_1930 need a table)";
        report(8, ok, detail.substr(1));
    }

    // 9. Whitehead doubles
    {
        VerifySummary s;
        verify_whitehead(cfg, s);
        std::vector<std::string> names{"double-v3-is-8v2", "double-v2-zero",
                                       "double-of-positive-jones-not-self-conjugate"};
        long knots = checked(s, "double-v3-is-8v2") / 2;
        report(9, s.ok(names) && knots >= 20,
               std::to_string(knots) + " fixture knots with c <= 8;" + summarize(s, names));
    }

    // 10. braid positivity decision
    {
        auto t = decide_braid_positive(fixture("!3_1"));
        auto f = decide_braid_positive(fixture("4_1"));
        bool witness = t.witness && t.witness->strands == 2 && t.witness->letters == std::vector<int>{1, 1, 1};
        bool ok = t.answer == BraidDecision::Answer::Yes && witness && f.answer == BraidDecision::Answer::No;
        report(10, ok,
               std::string("!3_1 -> ") + answer_name(t.answer) + " witness " +
                   (t.witness ? serialize(*t.witness) : "none") + "; 4_1 -> " + answer_name(f.answer));
    }

    // 11. structure
    {
        VerifySummary s;
        verify_structure(cfg, s);
        verify_fixtures(cfg, s);
        std::vector<std::string> names{"three-by-two-rejected", "even-valence", "double-connectivity",
                                       "mirror-antisymmetry-v3", "mirror-invariance-v2"};
        bool ok = s.ok(names) && corpus.ok({"even-valence", "double-connectivity", "mirror-antisymmetry-v3",
                                            "mirror-invariance-v2"});
        report(11, ok, "fixtures:" + summarize(s, names) + "; corpus:" +
                           summarize(corpus, {"even-valence", "double-connectivity", "mirror-antisymmetry-v3",
                                              "mirror-invariance-v2"}));
    }

    int pass = 0, skipped = 0;
    for (auto& l : lines) {
        pass += l.status == "PASS";
        skipped += l.status == "SKIP";
    }
    std::cout << pass << " passed, " << failed << " failed, " << skipped << " skipped; corpus suite "
              << static_cast<int>(corpus_time) << "s, total " << static_cast<int>(seconds_since(t0)) << "s\n";
    return failed ? 1 : 0;
}
