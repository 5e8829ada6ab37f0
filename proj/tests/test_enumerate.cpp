#include <algorithm>
#include <set>

#include "doctest.h"

#include "fixtures.hpp"
#include "json.hpp"
#include "speh/enumerate.hpp"

using namespace speh;

namespace {

struct RepOrder {
    bool operator()(const UnitaryRep& a, const UnitaryRep& b) const { return repLess(a, b); }
};

// Independent generator: builds the (rho, l, k, alpha?) tuples with its own
// loops and walks them choosing an explicit multiplicity for every tuple in
// turn (a different recursion shape than the production enumerator).
std::vector<Factor> tuplesByHand(const UniverseSpec& spec) {
    std::vector<Factor> out;
    for (const auto& [id, sym] : spec.alphabet.symbols())
        for (int l = 1; l <= spec.maxDegree; ++l)
            for (int k = 1; k <= spec.maxK; ++k) {
                if (l * k * sym.degree <= spec.maxDegree)
                    out.push_back(mkSpeh(steinberg(sym, l), k));
                if (2 * l * k * sym.degree <= spec.maxDegree)
                    for (const Rat& alpha : spec.alphaGrid)
                        out.push_back(mkComplementary(steinberg(sym, l), k, alpha));
            }
    return out;
}

void odometer(const std::vector<Factor>& types, std::size_t at, int remaining,
              std::vector<Factor>& current, std::set<UnitaryRep, RepOrder>& out) {
    if (at == types.size()) {
        out.insert(UnitaryRep(std::vector<Factor>(current)));
        return;
    }
    int d = degree(types[at]);
    for (int copies = 0; copies * d <= remaining; ++copies) {
        for (int c = 0; c < copies; ++c) current.push_back(types[at]);
        odometer(types, at + 1, remaining - copies * d, current, out);
        for (int c = 0; c < copies; ++c) current.pop_back();
    }
}

// Independent count: the coin-change recurrence over factor degrees.
long long countByDp(const UniverseSpec& spec) {
    std::vector<long long> coef(spec.maxDegree + 1, 0);
    coef[0] = 1;
    for (const Factor& f : factorUniverse(spec)) {
        int d = degree(f);
        for (int n = d; n <= spec.maxDegree; ++n) coef[n] += coef[n - d];
    }
    long long total = 0;
    for (long long c : coef) total += c;
    return total;
}

} // namespace

TEST_CASE("the tiny r0 universe contains exactly the six expected reps") {
    Alphabet a = Alphabet::fromSymbols({{"r0", 1, "r0", "r0", 0}});
    UniverseSpec spec{a, 2, 2, {Rat(1, 4)}};
    auto reps = enumerateAll(spec);
    REQUIRE(reps.size() == 6);

    Segment s1 = fixtures::st(a, "r0", 1);
    std::set<UnitaryRep, RepOrder> expected;
    expected.insert(UnitaryRep());
    expected.insert(UnitaryRep::single(mkSpeh(s1, 1)));
    expected.insert(UnitaryRep::single(mkSpeh(fixtures::st(a, "r0", 2), 1)));
    expected.insert(UnitaryRep::single(mkSpeh(s1, 2)));
    expected.insert(fixtures::rep({mkSpeh(s1, 1), mkSpeh(s1, 1)}));
    expected.insert(UnitaryRep::single(mkComplementary(s1, 1, Rat(1, 4))));

    std::set<UnitaryRep, RepOrder> got(reps.begin(), reps.end());
    CHECK(got == expected);
}

TEST_CASE("degree bound zero leaves only the trivial representation") {
    UniverseSpec spec{fixtures::standard(), 0, 4, {}};
    auto reps = enumerateAll(spec);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].empty());
}

TEST_CASE("emission is strictly increasing and canonical") {
    UniverseSpec spec{fixtures::standard(), 5, 3, {Rat(1, 4)}};
    auto reps = enumerateAll(spec);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i) CHECK(repLess(reps[i - 1], reps[i]));
        CHECK(UnitaryRep(std::vector<Factor>(reps[i].factors())) == reps[i]);
        CHECK(reps[i].degree() <= 5);
    }
}

TEST_CASE("an independently coded generator produces the same set") {
    UniverseSpec spec{fixtures::standard(), 5, 3, {Rat(1, 4), Rat(1, 3)}};
    std::set<UnitaryRep, RepOrder> independent;
    std::vector<Factor> scratch;
    odometer(tuplesByHand(spec), 0, spec.maxDegree, scratch, independent);

    auto reps = enumerateAll(spec);
    std::set<UnitaryRep, RepOrder> got(reps.begin(), reps.end());
    CHECK(got.size() == reps.size()); // no duplicates in the stream
    CHECK(got == independent);
}

TEST_CASE("the coin-change recurrence confirms the universe sizes") {
    Alphabet a = fixtures::standard();
    for (int maxDegree : {4, 6, 8}) {
        UniverseSpec spec{a, maxDegree, 4, {Rat(1, 4), Rat(1, 3)}};
        CHECK(static_cast<long long>(enumerateAll(spec).size()) == countByDp(spec));
    }
}

TEST_CASE("the fixture factor universe has the hand-counted size") {
    UniverseSpec spec{fixtures::standard(), 12, 4, {Rat(1, 4), Rat(1, 3)}};
    auto types = factorUniverse(spec);
    CHECK(types.size() == 169); // 87 Speh + 82 complementary
    int speh = 0;
    for (const Factor& f : types) speh += std::holds_alternative<SpehFactor>(f) ? 1 : 0;
    CHECK(speh == 87);
    CHECK(std::is_sorted(types.begin(), types.end(), factorLess));
}

TEST_CASE("compact universe storage matches the streamed enumeration") {
    UniverseSpec spec{fixtures::standard(), 6, 3, {Rat(1, 4)}};
    Universe u = Universe::build(spec);
    auto reps = enumerateAll(spec);
    REQUIRE(u.size() == reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(u.materialize(i) == reps[i]);
        CHECK(u.degreeOf(i) == reps[i].degree());
    }
    std::uint64_t grouped = 0;
    for (const auto& bucket : u.byDegree()) grouped += bucket.size();
    CHECK(grouped == u.size());
}

TEST_CASE("matching oracle agrees with canonical self-duality") {
    Alphabet a = fixtures::standard();
    UnitaryRep pair = fixtures::rep(
        {mkSpeh(fixtures::st(a, "t", 1), 1), mkSpeh(fixtures::st(a, "ts", 1), 1)});
    CHECK(matchingOracle(pair, a));
    CHECK(!matchingOracle(UnitaryRep::single(mkSpeh(fixtures::st(a, "t", 1), 1)), a));

    UniverseSpec spec{a, 6, 3, {Rat(1, 4)}};
    for (const auto& r : enumerateAll(spec)) CHECK(matchingOracle(r, a) == isSigmaSelfDual(r, a));
}

TEST_CASE("cross-check passes on the fixture and reports instance counts") {
    UniverseSpec spec{fixtures::standard(), 6, 4, {Rat(1, 4), Rat(1, 3)}};
    CrossCheckReport report = crossCheck(spec);
    CHECK(report.ok());
    CHECK(report.properties.size() == 14);
    CHECK(report.universeSize == 2967);
    for (const auto& p : report.properties) CHECK(p.instances > 0);

    auto j = nlohmann::json::parse(report.toJson(spec));
    CHECK(j["version"] == 1);
    CHECK(j["spec"]["maxDegree"] == 6);
    CHECK(j["properties"].size() == 14);
    CHECK(j["properties"][0]["failures"].empty());
}

TEST_CASE("cross-check on an empty-degree universe passes vacuously") {
    UniverseSpec spec{fixtures::standard(), 0, 4, {}};
    CrossCheckReport report = crossCheck(spec);
    CHECK(report.ok());
    CHECK(report.universeSize == 1);
}

TEST_CASE("the injected parity bug is caught, in particular by alternation") {
    UniverseSpec spec{fixtures::standard(), 6, 3, {Rat(1, 4)}};
    CrossCheckOptions opts;
    opts.injectParityFlip = "r0";
    CrossCheckReport report = crossCheck(spec, opts);
    CHECK(!report.ok());
    bool alternationFailed = false;
    for (const auto& p : report.properties)
        if (p.name == "alternation") alternationFailed = !p.failures.empty();
    CHECK(alternationFailed);
}

TEST_CASE("invalid universe specs are rejected") {
    Alphabet a = fixtures::standard();
    try {
        validateSpec(UniverseSpec{a, 6, 4, {Rat(1, 2)}});
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == errc::alpha_out_of_range);
    }
    CHECK_THROWS_AS(validateSpec(UniverseSpec{a, -1, 4, {}}), std::invalid_argument);
}
