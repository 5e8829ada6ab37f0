#pragma once

#include <optional>

#include "speh/alphabet.hpp"
#include "speh/segment.hpp"
#include "speh/unitary.hpp"

namespace fixtures {

// r0: self-dual degree 1, sigma-distinguished; r1: self-dual degree 2,
// eta-distinguished; t/ts: a non-self-dual pair swapped by sigma.
inline speh::Alphabet standard() {
    return speh::Alphabet::fromSymbols({
        {"r0", 1, "r0", "r0", 0},
        {"r1", 2, "r1", "r1", 1},
        {"t", 1, "t", "ts", std::nullopt},
        {"ts", 1, "ts", "t", std::nullopt},
    });
}

inline speh::Segment st(const speh::Alphabet& a, const std::string& id, int l,
                        speh::Rat center = speh::Rat(0)) {
    return speh::steinberg(a.at(id), l, center);
}

inline speh::UnitaryRep rep(std::vector<speh::Factor> fs) {
    return speh::UnitaryRep(std::move(fs));
}

} // namespace fixtures
