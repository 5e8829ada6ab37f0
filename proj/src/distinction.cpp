#include "speh/distinction.hpp"

#include <sstream>

#include "json.hpp"

namespace speh {

namespace {

ProofTrace selfDualLeaf(const UnitaryRep& r, bool value) {
    return ProofTrace{value, rules::PROP_SELFDUAL_NECESSARY, toText(r), {}};
}

// Shared core of the sigma-induced test and its generic restriction. Walks
// the multiset run-length wise; only sigma-self-dual plain Speh factors of
// odd multiplicity contribute a condition. When trace is non-null the k >= 2
// conditions are wrapped in the Speh-reduction rule, k = 1 ones cite the
// discrete-series criterion directly.
bool inducedCore(const UnitaryRep& r, const Alphabet& a, const char* rootRule, ProofTrace* trace) {
    bool selfDual = isSigmaSelfDual(r, a);
    bool ok = selfDual;

    std::vector<ProofTrace> children;
    if (trace) children.push_back(selfDualLeaf(r, selfDual));

    if (selfDual) {
        const auto& fs = r.factors();
        for (std::size_t i = 0; i < fs.size();) {
            std::size_t j = i;
            while (j < fs.size() && fs[j] == fs[i]) ++j;
            std::size_t mult = j - i;
            const Factor& f = fs[i];
            i = j;
            if (mult % 2 == 0) continue;
            const auto* s = std::get_if<SpehFactor>(&f);
            if (!s) continue; // complementary factors impose nothing beyond self-duality
            if (!factorSigmaSelfDual(f, a)) continue;
            bool segOk = segmentDistinguished(s->delta, a);
            ok = ok && segOk;
            if (trace) {
                ProofTrace leaf{segOk, rules::PROP_DISCRDIST, toText(s->delta), {}};
                if (s->k >= 2) {
                    children.push_back(ProofTrace{segOk, rules::COR_SPEHDIST, toText(f), {leaf}});
                } else {
                    children.push_back(std::move(leaf));
                }
            }
        }
    }

    if (trace) *trace = ProofTrace{ok, rootRule, toText(r), std::move(children)};
    return ok;
}

bool checkerCore(const UnitaryRep& r, const Alphabet& a, ProofTrace* trace) {
    bool selfDual = isSigmaSelfDual(r, a);
    std::vector<ProofTrace> children;
    if (trace) children.push_back(selfDualLeaf(r, selfDual));
    if (!selfDual) {
        if (trace) *trace = ProofTrace{false, rules::THM_UNITDIST, toText(r), std::move(children)};
        return false;
    }

    auto [rigid, generic] = splitRigidGeneric(r);
    bool ok = true;
    if (!generic.empty()) {
        ProofTrace g;
        bool genOk = inducedCore(generic, a, rules::THM_DISTGEN, trace ? &g : nullptr);
        ok = ok && genOk;
        if (trace) children.push_back(std::move(g));
    }
    if (!rigid.empty()) {
        ProofTrace sub;
        bool rigidOk = checkerCore(highestShiftedDerivative(rigid), a, trace ? &sub : nullptr);
        ok = ok && rigidOk;
        if (trace)
            children.push_back(ProofTrace{rigidOk, rules::LEM_DERNIER, toText(rigid), {std::move(sub)}});
    }
    if (trace) *trace = ProofTrace{ok, rules::THM_UNITDIST, toText(r), std::move(children)};
    return ok;
}

} // namespace

Verdict isSigmaInduced(const UnitaryRep& r, const Alphabet& a) {
    Verdict v;
    v.value = inducedCore(r, a, rules::DEF_SIGMA_INDUCED, &v.trace);
    return v;
}

Verdict isDistinguished(const UnitaryRep& r, const Alphabet& a) {
    Verdict v;
    ProofTrace inner;
    v.value = inducedCore(r, a, rules::DEF_SIGMA_INDUCED, &inner);
    v.trace = ProofTrace{v.value, rules::THM_UNITDIST, toText(r), {std::move(inner)}};
    return v;
}

Verdict isDistinguishedGeneric(const UnitaryRep& r, const Alphabet& a) {
    for (const Factor& f : r.factors())
        if (multiplierOf(f) >= 2)
            fail(errc::not_generic, "factor " + toText(f) + " has multiplier >= 2");
    Verdict v;
    v.value = inducedCore(r, a, rules::THM_DISTGEN, &v.trace);
    return v;
}

Verdict inductiveChecker(const UnitaryRep& r, const Alphabet& a) {
    Verdict v;
    v.value = checkerCore(r, a, &v.trace);
    return v;
}

bool isSigmaInducedValue(const UnitaryRep& r, const Alphabet& a) {
    return inducedCore(r, a, rules::DEF_SIGMA_INDUCED, nullptr);
}

bool isDistinguishedValue(const UnitaryRep& r, const Alphabet& a) {
    return isSigmaInducedValue(r, a);
}

bool inductiveCheckerValue(const UnitaryRep& r, const Alphabet& a) {
    return checkerCore(r, a, nullptr);
}

std::pair<UnitaryRep, UnitaryRep> endOfComplementarySeries(const Segment& delta, int k) {
    if (delta.trivial() || !delta.unitary())
        fail(errc::non_unitary_segment,
             "end of complementary series needs a unitary segment, got " + toText(delta));
    if (k < 2) fail(errc::bad_multiplier, "end of complementary series needs k >= 2");

    std::vector<Factor> sideA;
    Segment lower = down(delta);
    if (!lower.trivial()) sideA.push_back(mkSpeh(lower, k));
    sideA.push_back(mkSpeh(up(delta), k));

    std::vector<Factor> sideB;
    if (k - 1 >= 1) sideB.push_back(mkSpeh(delta, k - 1));
    sideB.push_back(mkSpeh(delta, k + 1));

    return {UnitaryRep(std::move(sideA)), UnitaryRep(std::move(sideB))};
}

Dichotomy dichotomy(const SpehFactor& f, const Alphabet& a) {
    if (!factorSigmaSelfDual(Factor{f}, a))
        fail(errc::not_self_dual, toText(Factor{f}) + " is not sigma-self-dual");
    return segmentDistinguished(f.delta, a) ? Dichotomy::SIGMA : Dichotomy::ETA;
}

namespace {

nlohmann::ordered_json traceNode(const ProofTrace& t) {
    nlohmann::ordered_json j;
    j["rule"] = t.rule;
    j["verdict"] = t.verdict;
    j["subject"] = t.subject;
    auto& kids = j["children"] = nlohmann::ordered_json::array();
    for (const ProofTrace& c : t.children) kids.push_back(traceNode(c));
    return j;
}

void renderText(const ProofTrace& t, int depth, std::ostringstream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << (t.verdict ? "+ " : "- ") << t.rule << "  " << t.subject << "\n";
    for (const ProofTrace& c : t.children) renderText(c, depth + 1, out);
}

} // namespace

std::string traceToJson(const ProofTrace& t) {
    nlohmann::ordered_json j;
    j["traceVersion"] = 1;
    j["version"] = 1;
    j["rule"] = t.rule;
    j["verdict"] = t.verdict;
    j["subject"] = t.subject;
    auto& kids = j["children"] = nlohmann::ordered_json::array();
    for (const ProofTrace& c : t.children) kids.push_back(traceNode(c));
    return j.dump(2);
}

std::string traceToText(const ProofTrace& t) {
    std::ostringstream out;
    renderText(t, 0, out);
    return out.str();
}

} // namespace speh
