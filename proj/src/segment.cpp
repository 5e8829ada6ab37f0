#include "speh/segment.hpp"

namespace speh {

bool segmentLess(const Segment& a, const Segment& b) {
    if (a.length == 0 || b.length == 0) return a.length == 0 && b.length > 0;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.length != b.length) return a.length < b.length;
    return a.center < b.center;
}

Segment trivialSegment() {
    return Segment{};
}

Segment steinberg(const CuspidalSymbol& rho, int length, Rat center) {
    if (length < 0) fail(errc::empty_segment, "segment length must be >= 0");
    if (length == 0) return trivialSegment();
    return Segment{rho.id, rho.degree, length, center};
}

Segment fromEndpoints(const CuspidalSymbol& rho, Rat a, Rat b) {
    Rat span = b - a;
    if (!span.isInteger() || span.num() < 0)
        fail(errc::invalid_endpoints,
             "endpoints " + a.str() + ".." + b.str() + " must differ by a non-negative integer");
    if (span.num() >= 1000000)
        fail(errc::invalid_endpoints, "segment spans from " + a.str() + " to " + b.str() +
                                          " exceed the supported length");
    return steinberg(rho, static_cast<int>(span.num()) + 1, (a + b) / Rat(2));
}

Segment up(const Segment& s) {
    if (s.trivial()) fail(errc::empty_segment, "cannot extend the trivial segment");
    Segment r = s;
    r.length += 1;
    return r;
}

Segment down(const Segment& s) {
    if (s.trivial()) fail(errc::empty_segment, "cannot shorten the trivial segment");
    if (s.length == 1) return trivialSegment();
    Segment r = s;
    r.length -= 1;
    return r;
}

Segment dualSeg(const Segment& s, const Alphabet& a) {
    if (s.trivial()) return s;
    Segment r = s;
    r.rho = a.at(s.rho).dual;
    r.center = -s.center;
    return r;
}

Segment sigmaSeg(const Segment& s, const Alphabet& a) {
    if (s.trivial()) return s;
    Segment r = s;
    r.rho = a.at(s.rho).sigma;
    return r;
}

Segment twist(const Segment& s, Rat shift) {
    if (s.trivial()) return s;
    Segment r = s;
    r.center = r.center + shift;
    return r;
}

static bool distinguishedWithParity(const Segment& s, const Alphabet& a, int wanted) {
    if (s.trivial()) fail(errc::empty_segment, "distinction is undefined for the trivial segment");
    if (!s.center.isZero()) return false;
    if (!a.sigmaSelfDual(s.rho)) return false;
    return a.distinguishedBy(s.rho, wanted);
}

bool segmentDistinguished(const Segment& s, const Alphabet& a) {
    return distinguishedWithParity(s, a, (s.length - 1) % 2);
}

bool segmentEtaDistinguished(const Segment& s, const Alphabet& a) {
    return distinguishedWithParity(s, a, s.length % 2);
}

std::string toText(const Segment& s) {
    if (s.trivial()) return "1";
    std::string core = "St(" + s.rho + "," + std::to_string(s.length) + ")";
    if (s.center.isZero()) return core;
    return "nu^{" + s.center.str() + "}*" + core;
}

} // namespace speh
