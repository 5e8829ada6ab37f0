#include "doctest.h"

#include "fixtures.hpp"
#include "speh/enumerate.hpp"

using namespace speh;

// The OpenMP driver must reproduce the serial reference bit for bit,
// including which counterexample gets reported.

TEST_CASE("parallel and serial cross-checks produce identical reports") {
    UniverseSpec spec{fixtures::standard(), 7, 4, {Rat(1, 4), Rat(1, 3)}};
    CrossCheckReport serial = crossCheckSerial(spec);
    CrossCheckReport parallel = crossCheck(spec);
    CHECK(serial.ok());
    CHECK(serial.toJson(spec) == parallel.toJson(spec));
}

TEST_CASE("identical reports under an injected failure") {
    UniverseSpec spec{fixtures::standard(), 6, 3, {Rat(1, 4)}};
    CrossCheckOptions opts;
    opts.injectParityFlip = "r0";
    CrossCheckReport serial = crossCheckSerial(spec, opts);
    CrossCheckReport parallel = crossCheck(spec, opts);
    CHECK(!serial.ok());
    CHECK(serial.toJson(spec) == parallel.toJson(spec));
}

TEST_CASE("enumeration order does not depend on the run") {
    UniverseSpec spec{fixtures::standard(), 5, 3, {Rat(1, 3)}};
    auto first = enumerateAll(spec);
    auto second = enumerateAll(spec);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}
