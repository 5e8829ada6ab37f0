#include "speh/unitary.hpp"

#include <algorithm>

namespace speh {

int degree(const Factor& f) {
    return std::visit([](const auto& x) { return x.degree(); }, f);
}

int multiplierOf(const Factor& f) {
    if (const auto* s = std::get_if<SpehFactor>(&f)) return s->k;
    return std::get<ComplementaryFactor>(f).base.k;
}

const Segment& segmentOf(const Factor& f) {
    if (const auto* s = std::get_if<SpehFactor>(&f)) return s->delta;
    return std::get<ComplementaryFactor>(f).base.delta;
}

bool factorLess(const Factor& a, const Factor& b) {
    int da = degree(a);
    int db = degree(b);
    if (da != db) return da < db;
    if (a.index() != b.index()) return a.index() < b.index(); // Speh first
    const Segment& sa = segmentOf(a);
    const Segment& sb = segmentOf(b);
    if (sa.rho != sb.rho) return sa.rho < sb.rho;
    if (sa.length != sb.length) return sa.length < sb.length;
    int ka = multiplierOf(a);
    int kb = multiplierOf(b);
    if (ka != kb) return ka < kb;
    if (a.index() == 1) {
        const Rat aa = std::get<ComplementaryFactor>(a).alpha;
        const Rat ab = std::get<ComplementaryFactor>(b).alpha;
        if (aa != ab) return aa < ab;
    }
    return sa.center < sb.center;
}

SpehFactor mkSpeh(const Segment& delta, int k) {
    if (delta.trivial() || !delta.unitary())
        fail(errc::non_unitary_segment,
             "Speh factors need a unitary segment of positive length, got " + toText(delta));
    if (k < 1) fail(errc::bad_multiplier, "Speh multiplier must be >= 1, got " + std::to_string(k));
    return SpehFactor{delta, k};
}

ComplementaryFactor mkComplementary(const Segment& delta, int k, Rat alpha) {
    SpehFactor base = mkSpeh(delta, k);
    if (!(Rat(0) < alpha && alpha < Rat(1, 2)))
        fail(errc::alpha_out_of_range,
             "complementary parameter must lie strictly between 0 and 1/2, got " + alpha.str());
    return ComplementaryFactor{base, alpha};
}

UnitaryRep::UnitaryRep(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(), factorLess);
}

UnitaryRep UnitaryRep::single(Factor f) {
    UnitaryRep r;
    r.factors_.push_back(std::move(f));
    return r;
}

UnitaryRep UnitaryRep::fromSorted(std::vector<Factor> factors) {
    UnitaryRep r;
    r.factors_ = std::move(factors);
    return r;
}

int UnitaryRep::degree() const {
    int d = 0;
    for (const Factor& f : factors_) d += speh::degree(f);
    return d;
}

bool repLess(const UnitaryRep& a, const UnitaryRep& b) {
    return std::lexicographical_compare(a.factors().begin(), a.factors().end(),
                                        b.factors().begin(), b.factors().end(), factorLess);
}

UnitaryRep product(const UnitaryRep& a, const UnitaryRep& b) {
    std::vector<Factor> merged;
    merged.reserve(a.factors().size() + b.factors().size());
    std::merge(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
               std::back_inserter(merged), factorLess);
    return UnitaryRep::fromSorted(std::move(merged));
}

Factor dualFactor(const Factor& f, const Alphabet& a) {
    if (const auto* s = std::get_if<SpehFactor>(&f)) return SpehFactor{dualSeg(s->delta, a), s->k};
    const auto& c = std::get<ComplementaryFactor>(f);
    return ComplementaryFactor{SpehFactor{dualSeg(c.base.delta, a), c.base.k}, c.alpha};
}

Factor sigmaFactor(const Factor& f, const Alphabet& a) {
    if (const auto* s = std::get_if<SpehFactor>(&f)) return SpehFactor{sigmaSeg(s->delta, a), s->k};
    const auto& c = std::get<ComplementaryFactor>(f);
    return ComplementaryFactor{SpehFactor{sigmaSeg(c.base.delta, a), c.base.k}, c.alpha};
}

static UnitaryRep mapFactors(const UnitaryRep& r, const Alphabet& a,
                             Factor (*fn)(const Factor&, const Alphabet&)) {
    std::vector<Factor> out;
    out.reserve(r.factors().size());
    for (const Factor& f : r.factors()) out.push_back(fn(f, a));
    return UnitaryRep(std::move(out));
}

UnitaryRep dualRep(const UnitaryRep& r, const Alphabet& a) {
    return mapFactors(r, a, dualFactor);
}

UnitaryRep sigmaRep(const UnitaryRep& r, const Alphabet& a) {
    return mapFactors(r, a, sigmaFactor);
}

bool factorSigmaSelfDual(const Factor& f, const Alphabet& a) {
    return sigmaFactor(dualFactor(f, a), a) == f;
}

bool isSigmaSelfDual(const UnitaryRep& r, const Alphabet& a) {
    return sigmaRep(dualRep(r, a), a) == r;
}

namespace {

// nu^shift * u(delta,k); the intermediate block both expansions share.
struct TwistedSpeh {
    SpehFactor base;
    Rat shift;
};

void expandTwists(const TwistedSpeh& t, std::vector<Segment>& out) {
    for (int j = 0; j < t.base.k; ++j) {
        Rat c = Rat(t.base.k - 1 - 2 * j, 2) + t.shift;
        out.push_back(twist(t.base.delta, c));
    }
}

} // namespace

std::vector<Segment> langlandsData(const UnitaryRep& r) {
    std::vector<Segment> out;
    for (const Factor& f : r.factors()) {
        if (const auto* s = std::get_if<SpehFactor>(&f)) {
            expandTwists({*s, Rat(0)}, out);
        } else {
            const auto& c = std::get<ComplementaryFactor>(f);
            expandTwists({c.base, c.alpha}, out);
            expandTwists({c.base, -c.alpha}, out);
        }
    }
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
        if (a.center != b.center) return b.center < a.center;
        return segmentLess(a, b);
    });
    return out;
}

std::string toText(const Factor& f) {
    if (const auto* s = std::get_if<SpehFactor>(&f))
        return "u(" + toText(s->delta) + "," + std::to_string(s->k) + ")";
    const auto& c = std::get<ComplementaryFactor>(f);
    return "pi(u(" + toText(c.base.delta) + "," + std::to_string(c.base.k) + ")," +
           c.alpha.str() + ")";
}

std::string toText(const UnitaryRep& r) {
    if (r.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < r.factors().size(); ++i) {
        if (i) s += " x ";
        s += toText(r.factors()[i]);
    }
    return s;
}

} // namespace speh
