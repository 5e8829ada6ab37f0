#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speh/distinction.hpp"

namespace speh {

// Finite slice of the classification parameter space: total degree bound,
// multiplier bound, and an explicit grid for the complementary parameter
// (distinction never reads alpha, so any grid gives full verdict coverage).
struct UniverseSpec {
    Alphabet alphabet;
    int maxDegree = 0;
    int maxK = 1;
    std::vector<Rat> alphaGrid;
};

void validateSpec(const UniverseSpec& spec);

// Every factor within bounds, in canonical order, no duplicates.
std::vector<Factor> factorUniverse(const UniverseSpec& spec);

// Streams every canonical multiset of factors with total degree <= maxDegree,
// exactly once, in lexicographic order of canonical factor sequences (the
// empty representation first).
void enumerate(const UniverseSpec& spec, const std::function<void(const UnitaryRep&)>& emit);
std::vector<UnitaryRep> enumerateAll(const UniverseSpec& spec);

// The same universe stored compactly: each representation is a sorted
// sequence of factor-type indices into types(). Index order equals the
// enumeration order.
class Universe {
public:
    static Universe build(const UniverseSpec& spec);

    std::size_t size() const { return offsets_.size() - 1; }
    std::span<const std::uint16_t> ids(std::size_t i) const {
        return {seq_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    int degreeOf(std::size_t i) const { return repDegree_[i]; }
    UnitaryRep materialize(std::size_t i) const;

    const std::vector<Factor>& types() const { return types_; }
    const std::vector<int>& typeDegrees() const { return typeDegree_; }
    // representation indices grouped by total degree, ascending within a group
    const std::vector<std::vector<std::uint32_t>>& byDegree() const { return byDegree_; }
    const std::vector<std::uint32_t>& posInDegree() const { return posInDegree_; }

private:
    std::vector<Factor> types_;
    std::vector<int> typeDegree_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint16_t> seq_;
    std::vector<std::uint8_t> repDegree_;
    std::vector<std::vector<std::uint32_t>> byDegree_;
    std::vector<std::uint32_t> posInDegree_;
};

// Brute-force search for a perfect pairing of the factor multiset matching
// each factor with one equal to sigma(dual(f)); a factor that is its own
// sigma-contragredient may stand alone. Independent route to sigma-self-duality.
bool matchingOracle(const UnitaryRep& r, const Alphabet& a);

struct Counterexample {
    std::uint64_t instance = 0;
    std::string subject;
    std::string detail;
};

struct PropertyReport {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<Counterexample> failures; // first counterexample, if any
};

struct CrossCheckReport {
    std::uint64_t universeSize = 0;
    std::vector<PropertyReport> properties;

    bool ok() const;
    std::string toJson(const UniverseSpec& spec) const;
    std::string summary() const;
};

struct CrossCheckOptions {
    // Test-only harness check: evaluate the engine-side route of every
    // two-route property against a copy of the alphabet with this cuspidal's
    // parity flipped, keeping the independent route on the declared alphabet.
    // A healthy harness must then report counterexamples.
    std::optional<std::string> injectParityFlip;
};

// Runs every exhaustive law over the enumerated universe and reports, per
// property, the instance count and the first counterexample if any.
// crossCheck evaluates the sweeps with OpenMP when available; crossCheckSerial
// is the plain reference driver. Both produce identical reports.
CrossCheckReport crossCheck(const UniverseSpec& spec, const CrossCheckOptions& opts = {});
CrossCheckReport crossCheckSerial(const UniverseSpec& spec, const CrossCheckOptions& opts = {});

} // namespace speh
