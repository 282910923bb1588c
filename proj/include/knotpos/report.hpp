#pragma once
// JSON views of the result records. Big integers and polynomials go out as
// strings so the output does not depend on the width of JSON numbers.

#include "json.hpp"

#include "knotpos/positivity.hpp"

namespace knotpos {

using json = nlohmann::ordered_json;

inline json to_json(const Laurent& p) { return p.str(); }
inline json to_json(const Laurent2& p) { return p.str(); }
inline json to_json(const Int& v) { return v.str(); }

inline json to_json(const BraidWord& b) { return {{"strands", b.strands}, {"letters", b.letters}}; }

inline json to_json(const SeifertData& s) {
    return {{"circles", s.circles},
            {"writhe", s.writhe},
            {"crossings", s.crossings},
            {"components", s.components},
            {"canonical_genus", s.canonical_genus}};
}

inline json to_json(const KnotInvariants& k) {
    json j;
    j["crossings"] = k.crossings;
    j["v2"] = to_json(k.v2);
    j["v3"] = to_json(k.v3);
    j["jones"] = to_json(k.jones);
    j["min_deg_v"] = k.jones.is_zero() ? 0 : k.jones.min_deg();
    j["span_v"] = k.jones.is_zero() ? 0 : k.jones.max_deg() - k.jones.min_deg();
    j["homfly"] = k.has_homfly ? to_json(k.homfly) : json(nullptr);
    j["conway"] = k.conway.str("z");
    j["alexander"] = to_json(k.alexander);
    j["signature"] = k.signature ? json(*k.signature) : json(nullptr);
    return j;
}

inline json to_json(const ObstructionReport& r) {
    json entries = json::array();
    for (auto& e : r.entries)
        entries.push_back({{"name", e.name},
                           {"instance", e.instance},
                           {"verdict", verdict_name(e.verdict)},
                           {"braid_only", e.braid_only}});
    return {{"overall", overall_name(r.overall)}, {"entries", entries}, {"caveat", r.caveat}};
}

inline json to_json(const MoveRecord& m) {
    return {{"kind", kind_name(m.kind)},
            {"arrow", m.arrow},
            {"loop_size", m.loop_size},
            {"switched", m.switched},
            {"reducible_removed", m.reducible_removed},
            {"crossings_before", m.crossings_before},
            {"crossings_after", m.crossings_after},
            {"v2_before", to_json(m.v2_before)},
            {"v2_after", to_json(m.v2_after)},
            {"unknots_component", m.unknots_component}};
}

inline json to_json(const MoveTrace& t) {
    json moves = json::array();
    for (auto& m : t.moves) moves.push_back(to_json(m));
    return {{"total_switches", t.total_switches}, {"moves", moves}};
}

inline json to_json(const BraidDecision& d) {
    return {{"answer", answer_name(d.answer)},
            {"witness", d.witness ? to_json(*d.witness) : json(nullptr)},
            {"words_tried", d.words_tried},
            {"report", to_json(d.report)}};
}

}  // namespace knotpos
