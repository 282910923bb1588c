#pragma once

#include <gtest/gtest.h>

#include "knotpos/knotpos.hpp"

namespace knotpos::testing {

inline const std::vector<TableEntry>& fixtures() {
    static const auto t = load_table(std::string(KNOTPOS_DATA_DIR) + "/knots.txt");
    return t;
}

inline PlanarDiagram knot(const std::string& name) {
    auto* e = find_entry(fixtures(), name);
    if (!e || !e->diagram) throw std::runtime_error("no fixture " + name);
    return *e->diagram;
}

inline PlanarDiagram dt(const std::string& text) { return parse_planar(Format::DT, text); }
inline PlanarDiagram closure(int n, std::vector<int> letters) { return braid_closure(BraidWord{n, std::move(letters)}); }

inline Laurent poly(std::initializer_list<std::pair<int, int>> terms) {
    Laurent p;
    for (auto [e, k] : terms) p.add_term(e, k);
    return p;
}

// V(t^-1)
inline Laurent conjugate(const Laurent& p) { return p.substitute_power(-1); }

}  // namespace knotpos::testing
