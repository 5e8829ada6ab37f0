#pragma once

#include <string>
#include <vector>

#include "speh/unitary.hpp"

namespace speh {

// Surface syntax:
//   rep      := factor { "x" factor }
//   factor   := speh | comp | segment | "1"
//   speh     := "u(" segment "," INT ")"
//   comp     := "pi(" speh "," RAT ")"
//   segment  := "St(" ID "," INT ")" | "nu^{" RAT "}*" segment
//             | "D(" ID ";" RAT ".." RAT ")"
//   RAT      := INT | INT "/" INT | "-" RAT
// Whitespace is insignificant outside tokens. D(id; a..b) is the segment with
// exponents running from a to b.
struct Expr {
    enum class Kind { SegmentLit, TwistedSegment, EndpointSegment, Speh, Comp, Product, Trivial };

    Kind kind = Kind::Trivial;
    int line = 0;
    int col = 0;
    std::string id;            // SegmentLit, EndpointSegment
    int number = 0;            // SegmentLit length, Speh multiplier
    Rat a;                     // TwistedSegment shift, Comp alpha, EndpointSegment low
    Rat b;                     // EndpointSegment high
    std::vector<Expr> children;
};

// Parses and resolves cuspidal ids against the alphabet; multiplier and alpha
// ranges and endpoint spans are checked here so every diagnostic carries the
// position of the offending token.
Expr parse(const std::string& text, const Alphabet& alphabet);

// Parses a single segment (the `segment` production, whole input).
Expr parseSegment(const std::string& text, const Alphabet& alphabet);

// Lowers to the canonical multiset. Bare unitary segments lift to u(delta,1);
// twisted segments used as factors are NonUnitarySegment.
UnitaryRep lower(const Expr& e, const Alphabet& alphabet);
Segment lowerSegment(const Expr& e, const Alphabet& alphabet);

// Canonical text; parse(printCanonical(r)) lowers back to r.
std::string printCanonical(const UnitaryRep& r);

} // namespace speh
