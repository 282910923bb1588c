// Obstruction reports for a few small knots given by DT codes.
#include <iostream>

#include "knotpos/knotpos.hpp"

using namespace knotpos;

int main() {
    const std::vector<std::pair<std::string, std::string>> knots{
        {"figure eight", "4 6 8 2"}, {"(2,5) torus knot", "6 8 10 2 4"}, {"6_3", "4 8 10 2 12 6"}};
    for (auto& [name, dt] : knots) {
        auto d = parse_planar(Format::DT, dt);
        auto k = compute_invariants(d);
        if (k.v3 < 0) k = compute_invariants(d = mirror(d));
        auto r = braid_positivity_obstructions(k);
        std::cout << name << ": v2 = " << k.v2 << ", v3 = " << k.v3 << ", V = " << k.jones.str("t") << '\n';
        for (auto& e : r.entries)
            if (e.verdict == Verdict::Violated) std::cout << "  violated " << e.name << ": " << e.instance << '\n';
        std::cout << "  verdict: " << overall_name(r.overall) << "\n";
    }
}
