#include "speh/derivative.hpp"

namespace speh {

UnitaryRep highestShiftedDerivativeFactor(const Factor& f) {
    if (const auto* s = std::get_if<SpehFactor>(&f)) {
        if (s->k == 1) return UnitaryRep();
        return UnitaryRep::single(SpehFactor{s->delta, s->k - 1});
    }
    const auto& c = std::get<ComplementaryFactor>(f);
    if (c.base.k == 1) return UnitaryRep();
    return UnitaryRep::single(ComplementaryFactor{SpehFactor{c.base.delta, c.base.k - 1}, c.alpha});
}

UnitaryRep highestShiftedDerivative(const UnitaryRep& r) {
    std::vector<Factor> out;
    out.reserve(r.factors().size());
    for (const Factor& f : r.factors()) {
        if (multiplierOf(f) == 1) continue;
        if (const auto* s = std::get_if<SpehFactor>(&f)) {
            out.push_back(SpehFactor{s->delta, s->k - 1});
        } else {
            const auto& c = std::get<ComplementaryFactor>(f);
            out.push_back(ComplementaryFactor{SpehFactor{c.base.delta, c.base.k - 1}, c.alpha});
        }
    }
    return UnitaryRep(std::move(out));
}

std::vector<UnitaryRep> derivativeLadder(const UnitaryRep& r) {
    std::vector<UnitaryRep> ladder;
    UnitaryRep cur = r;
    for (;;) {
        bool done = cur.empty();
        ladder.push_back(std::move(cur));
        if (done) break;
        cur = highestShiftedDerivative(ladder.back());
    }
    return ladder;
}

std::pair<UnitaryRep, UnitaryRep> splitRigidGeneric(const UnitaryRep& r) {
    std::vector<Factor> rigid;
    std::vector<Factor> generic;
    for (const Factor& f : r.factors())
        (multiplierOf(f) >= 2 ? rigid : generic).push_back(f);
    return {UnitaryRep::fromSorted(std::move(rigid)), UnitaryRep::fromSorted(std::move(generic))};
}

} // namespace speh
