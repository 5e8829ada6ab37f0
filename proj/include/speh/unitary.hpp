#pragma once

#include <string>
#include <variant>
#include <vector>

#include "speh/segment.hpp"

namespace speh {

// u(delta, k): the Langlands quotient built from k consecutive half-integer
// twists of a unitary segment.
struct SpehFactor {
    Segment delta;
    int k = 1;

    int degree() const { return k * delta.degree(); }
    friend bool operator==(const SpehFactor& a, const SpehFactor& b) {
        return a.k == b.k && a.delta == b.delta;
    }
};

// pi(u(delta,k), alpha) = nu^alpha u x nu^-alpha u, with 0 < alpha < 1/2.
struct ComplementaryFactor {
    SpehFactor base;
    Rat alpha;

    int degree() const { return 2 * base.degree(); }
    friend bool operator==(const ComplementaryFactor& a, const ComplementaryFactor& b) {
        return a.alpha == b.alpha && a.base == b.base;
    }
};

using Factor = std::variant<SpehFactor, ComplementaryFactor>;

int degree(const Factor& f);
int multiplierOf(const Factor& f); // the k of the factor (base k for complementary)
const Segment& segmentOf(const Factor& f);

// Canonical total order: (degree, Speh before complementary, rho, length, k, alpha).
bool factorLess(const Factor& a, const Factor& b);

SpehFactor mkSpeh(const Segment& delta, int k);
ComplementaryFactor mkComplementary(const Segment& delta, int k, Rat alpha);

// A canonical multiset of factors. Factors are stored sorted, so two equal
// representations have identical stored forms; the empty multiset is the
// trivial representation of G_0.
class UnitaryRep {
public:
    UnitaryRep() = default;
    explicit UnitaryRep(std::vector<Factor> factors);
    static UnitaryRep single(Factor f);
    // Caller guarantees `factors` is already sorted by factorLess.
    static UnitaryRep fromSorted(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const;
    bool empty() const { return factors_.empty(); }

    friend bool operator==(const UnitaryRep& a, const UnitaryRep& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const UnitaryRep& a, const UnitaryRep& b) { return !(a == b); }

private:
    std::vector<Factor> factors_;
};

// Lexicographic on the canonical factor sequences; the deterministic total
// order used for streams and reports.
bool repLess(const UnitaryRep& a, const UnitaryRep& b);

// Multiset union; commutative, associative, empty rep is the identity.
UnitaryRep product(const UnitaryRep& a, const UnitaryRep& b);

Factor dualFactor(const Factor& f, const Alphabet& a);
Factor sigmaFactor(const Factor& f, const Alphabet& a);
UnitaryRep dualRep(const UnitaryRep& r, const Alphabet& a);
UnitaryRep sigmaRep(const UnitaryRep& r, const Alphabet& a);

bool factorSigmaSelfDual(const Factor& f, const Alphabet& a); // sigma(dual(f)) == f
bool isSigmaSelfDual(const UnitaryRep& r, const Alphabet& a); // sigma(dual(pi)) == pi

// Expands every factor into its list of twisted segments: u(delta,k) into the
// k twists centered at 0, complementary factors into the +-alpha shifts of
// that list. Sorted by non-increasing center, ties by segment order.
std::vector<Segment> langlandsData(const UnitaryRep& r);

std::string toText(const Factor& f);
std::string toText(const UnitaryRep& r); // factors joined by " x ", "1" if empty

} // namespace speh
