#pragma once

#include <string>
#include <utility>
#include <vector>

#include "speh/derivative.hpp"
#include "speh/unitary.hpp"

namespace speh {

// Frozen rule tokens used in proof traces; downstream tooling matches on them.
namespace rules {
inline constexpr const char* THM_UNITDIST = "THM-UNITDIST";
inline constexpr const char* THM_DISTGEN = "THM-DISTGEN";
inline constexpr const char* DEF_SIGMA_INDUCED = "DEF-SIGMA-INDUCED";
inline constexpr const char* PROP_SELFDUAL_NECESSARY = "PROP-SELFDUAL-NECESSARY";
inline constexpr const char* PROP_DISCRDIST = "PROP-DISCRDIST";
inline constexpr const char* COR_SPEHDIST = "COR-SPEHDIST";
inline constexpr const char* COR_ALTERNATION = "COR-ALTERNATION";
inline constexpr const char* LEM_DERNIER = "LEM-DERNIER";
} // namespace rules

// A node justifies its verdict by its rule applied to the children; leaves
// cite declared parities or self-duality checks. subject is the canonical
// text of the object being judged.
struct ProofTrace {
    bool verdict = false;
    std::string rule;
    std::string subject;
    std::vector<ProofTrace> children;
};

struct Verdict {
    bool value = false;
    ProofTrace trace;
};

// sigma-induced: sigma-self-dual, and every sigma-self-dual plain Speh factor
// occurring with odd multiplicity is built on a distinguished segment.
Verdict isSigmaInduced(const UnitaryRep& r, const Alphabet& a);

// Distinction for arbitrary unitary representations; coincides with the
// sigma-induced test, traced under THM-UNITDIST.
Verdict isDistinguished(const UnitaryRep& r, const Alphabet& a);

// The k = 1 special case; throws NotGeneric if any factor has k >= 2.
Verdict isDistinguishedGeneric(const UnitaryRep& r, const Alphabet& a);

// Independent decision procedure: check self-duality, split rigid x generic,
// judge the generic slice by the generic criterion, recurse on the highest
// shifted derivative of the rigid slice. Must agree with isDistinguished
// everywhere.
Verdict inductiveChecker(const UnitaryRep& r, const Alphabet& a);

// Trace-free cores used by the exhaustive sweeps.
bool isSigmaInducedValue(const UnitaryRep& r, const Alphabet& a);
bool isDistinguishedValue(const UnitaryRep& r, const Alphabet& a);
bool inductiveCheckerValue(const UnitaryRep& r, const Alphabet& a);

// The two length-2 subquotient products at the alpha = 1/2 wall:
// first  u(down(delta),k) x u(up(delta),k)
// second u(delta,k-1) x u(delta,k+1)
// Trivial constituents (length-0 segment, zero multiplier) are dropped.
// Requires delta unitary of positive length and k >= 2.
std::pair<UnitaryRep, UnitaryRep> endOfComplementarySeries(const Segment& delta, int k);

enum class Dichotomy { SIGMA, ETA };

// A sigma-self-dual Speh factor is sigma-distinguished or eta-distinguished,
// never both; which one depends only on its segment. Throws NotSelfDual.
Dichotomy dichotomy(const SpehFactor& f, const Alphabet& a);

// {"traceVersion":1,"rule":...,"verdict":...,"subject":...,"children":[...]}
std::string traceToJson(const ProofTrace& t);
std::string traceToText(const ProofTrace& t); // indented tree

} // namespace speh
