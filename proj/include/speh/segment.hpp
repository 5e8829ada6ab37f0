#pragma once

#include <string>

#include "speh/alphabet.hpp"
#include "speh/rational.hpp"

namespace speh {

// nu^center * St(rho, length). length 0 is the trivial representation of G_0;
// it is normalized to a single canonical value (no rho, center 0) so equality
// is structural. rhoDegree is carried in the value; dual/sigma preserve it.
struct Segment {
    std::string rho;
    int rhoDegree = 0;
    int length = 0;
    Rat center;

    int degree() const { return length * rhoDegree; }
    bool trivial() const { return length == 0; }
    bool unitary() const { return center.isZero(); }

    friend bool operator==(const Segment& a, const Segment& b) {
        if (a.length == 0 || b.length == 0) return a.length == b.length;
        return a.rho == b.rho && a.rhoDegree == b.rhoDegree && a.length == b.length &&
               a.center == b.center;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
};

// Canonical order: (degree, rho, length, center).
bool segmentLess(const Segment& a, const Segment& b);

Segment trivialSegment();

// nu^center * St(rho, length); length 0 collapses to the trivial segment.
Segment steinberg(const CuspidalSymbol& rho, int length, Rat center = Rat(0));

// Segment with cuspidal exponents running from a up to b; requires b - a to be
// a non-negative integer. Result has length b-a+1 and center (a+b)/2.
Segment fromEndpoints(const CuspidalSymbol& rho, Rat a, Rat b);

Segment up(const Segment& s);   // length + 1
Segment down(const Segment& s); // length - 1; length 1 collapses to trivial

Segment dualSeg(const Segment& s, const Alphabet& a);  // contragredient: rho -> dual, center negated
Segment sigmaSeg(const Segment& s, const Alphabet& a); // Galois twist: rho -> sigma
Segment twist(const Segment& s, Rat shift);

// St(rho,l) is sigma-distinguished iff it is unitary on a sigma-self-dual
// cuspidal whose parity matches l-1 mod 2; the eta-twisted variant matches
// l mod 2. Exactly one of the two holds on the self-dual unitary locus.
bool segmentDistinguished(const Segment& s, const Alphabet& a);
bool segmentEtaDistinguished(const Segment& s, const Alphabet& a);

// "St(id,l)", "nu^{p/q}*St(id,l)", or "1" for the trivial segment.
std::string toText(const Segment& s);

} // namespace speh
