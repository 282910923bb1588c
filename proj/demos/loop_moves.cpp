// Unknots a positive braid closure by loop moves and prints the ledger.
#include <iostream>

#include "knotpos/knotpos.hpp"

using namespace knotpos;

int main() {
    BraidWord b{3, {1, 2, 1, 2, 1, 2, 1, 2}};
    auto g = to_gauss(braid_closure(b));
    auto t = trivialize_by_loops(g);
    std::cout << serialize(b) << ": c = " << t.reduced_crossings << ", v2 = " << t.v2
              << ", g_can = " << t.canonical_genus << '\n';
    for (auto& m : t.trace.moves) {
        std::cout << "  " << kind_name(m.kind) << " k=" << m.loop_size << " switched=" << m.switched
                  << " crossings " << m.crossings_before << "->" << m.crossings_after << " v2 " << m.v2_before
                  << "->" << m.v2_after << '\n';
    }
    std::cout << "switches " << t.total_switches << ", 5 v2 = " << 5 * t.v2 << " >= c + switches = "
              << t.reduced_crossings + t.total_switches << '\n';
}
