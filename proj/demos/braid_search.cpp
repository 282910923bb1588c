// Vogel braiding of a DT diagram, then the bounded positive braid search.
#include <iostream>

#include "knotpos/knotpos.hpp"

using namespace knotpos;

int main(int argc, char** argv) {
    std::string dt = argc > 1 ? argv[1] : "6 8 10 2 4";
    auto d = parse_planar(Format::DT, dt);
    auto v = vogel_braiding(d);
    std::cout << "braided after " << v.moves << " Vogel moves: " << serialize(v.braid) << '\n';
    for (auto diag : {d, mirror(d)}) {
        auto dec = decide_braid_positive(diag);
        std::cout << "braid positive: " << answer_name(dec.answer);
        if (dec.witness) std::cout << ", witness " << serialize(*dec.witness);
        std::cout << " (" << dec.words_tried << " words)\n";
    }
}
