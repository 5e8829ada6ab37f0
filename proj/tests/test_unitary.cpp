#include <map>
#include <string>

#include "doctest.h"

#include "fixtures.hpp"
#include "speh/enumerate.hpp"
#include "speh/unitary.hpp"

using namespace speh;

TEST_CASE("Speh factor construction") {
    Alphabet a = fixtures::standard();
    SpehFactor f = mkSpeh(fixtures::st(a, "r0", 2), 3);
    CHECK(f.degree() == 6);
    CHECK(mkSpeh(fixtures::st(a, "r0", 1), 1).degree() == 1);

    CHECK_THROWS_AS((void)mkSpeh(fixtures::st(a, "r0", 2, Rat(1, 3)), 2), Error);
    CHECK_THROWS_AS((void)mkSpeh(trivialSegment(), 2), Error);
    try {
        (void)mkSpeh(fixtures::st(a, "r0", 1), 0);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_multiplier);
    }
}

TEST_CASE("complementary factor construction") {
    Alphabet a = fixtures::standard();
    CHECK(mkComplementary(fixtures::st(a, "r0", 1), 2, Rat(1, 4)).degree() == 4);
    CHECK(mkComplementary(fixtures::st(a, "r1", 1), 1, Rat(1, 3)).degree() == 4);
    try {
        (void)mkComplementary(fixtures::st(a, "r0", 1), 1, Rat(1, 2));
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == errc::alpha_out_of_range);
    }
    CHECK_THROWS_AS((void)mkComplementary(fixtures::st(a, "r0", 1), 1, Rat(0)), Error);
}

TEST_CASE("products are canonical multisets") {
    Alphabet a = fixtures::standard();
    UnitaryRep u2 = UnitaryRep::single(mkSpeh(fixtures::st(a, "r0", 1), 2));
    UnitaryRep doubled = product(u2, u2);
    CHECK(doubled.factors().size() == 2);
    CHECK(doubled.factors()[0] == doubled.factors()[1]);
    CHECK(doubled.degree() == 4);

    UnitaryRep empty;
    CHECK(product(u2, empty) == u2);
    CHECK(product(empty, empty) == empty);
}

TEST_CASE("product is commutative and associative over a small universe") {
    Alphabet a = fixtures::standard();
    UniverseSpec spec{a, 3, 2, {Rat(1, 4)}};
    auto reps = enumerateAll(spec);
    for (const auto& x : reps)
        for (const auto& y : reps) {
            CHECK(product(x, y) == product(y, x));
            CHECK(product(x, y).degree() == x.degree() + y.degree());
            for (const auto& z : reps)
                CHECK(product(x, product(y, z)) == product(product(x, y), z));
        }
}

TEST_CASE("duality and Galois twist act factor-wise") {
    Alphabet a = fixtures::standard();
    UnitaryRep ut = UnitaryRep::single(mkSpeh(fixtures::st(a, "t", 1), 2));
    CHECK(dualRep(ut, a) == ut); // t is self-contragredient
    CHECK(sigmaRep(ut, a) == UnitaryRep::single(mkSpeh(fixtures::st(a, "ts", 1), 2)));

    UniverseSpec spec{a, 4, 2, {Rat(1, 4)}};
    for (const auto& r : enumerateAll(spec)) {
        CHECK(dualRep(sigmaRep(r, a), a) == sigmaRep(dualRep(r, a), a));
        CHECK(dualRep(dualRep(r, a), a) == r);
        CHECK(sigmaRep(sigmaRep(r, a), a) == r);
        CHECK(dualRep(r, a).degree() == r.degree());
        CHECK(isSigmaSelfDual(product(r, sigmaRep(dualRep(r, a), a)), a));
    }
}

TEST_CASE("sigma-self-duality of whole representations") {
    Alphabet a = fixtures::standard();
    UnitaryRep pair = fixtures::rep(
        {mkSpeh(fixtures::st(a, "t", 1), 1), mkSpeh(fixtures::st(a, "ts", 1), 1)});
    CHECK(isSigmaSelfDual(pair, a));
    CHECK(!isSigmaSelfDual(UnitaryRep::single(mkSpeh(fixtures::st(a, "t", 1), 1)), a));
    CHECK(isSigmaSelfDual(
        UnitaryRep::single(mkComplementary(fixtures::st(a, "r0", 1), 2, Rat(1, 4))), a));
}

TEST_CASE("Langlands data expansion") {
    Alphabet a = fixtures::standard();
    auto segs = langlandsData(UnitaryRep::single(mkSpeh(fixtures::st(a, "r0", 1), 2)));
    REQUIRE(segs.size() == 2);
    CHECK(toText(segs[0]) == "nu^{1/2}*St(r0,1)");
    CHECK(toText(segs[1]) == "nu^{-1/2}*St(r0,1)");

    auto single = langlandsData(UnitaryRep::single(mkSpeh(fixtures::st(a, "r0", 2), 1)));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == fixtures::st(a, "r0", 2));

    auto comp = langlandsData(
        UnitaryRep::single(mkComplementary(fixtures::st(a, "r0", 1), 2, Rat(1, 4))));
    REQUIRE(comp.size() == 4);
    CHECK(comp[0].center == Rat(3, 4));
    CHECK(comp[1].center == Rat(1, 4));
    CHECK(comp[2].center == Rat(-1, 4));
    CHECK(comp[3].center == Rat(-3, 4));
}

TEST_CASE("Langlands data is sorted, degree-preserving and separates reps") {
    Alphabet a = fixtures::standard();
    UniverseSpec spec{a, 5, 3, {Rat(1, 4)}};
    std::map<std::string, UnitaryRep> seen;
    for (const auto& r : enumerateAll(spec)) {
        auto segs = langlandsData(r);
        int total = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].degree();
            if (i) CHECK(!(segs[i - 1].center < segs[i].center));
        }
        CHECK(total == r.degree());
        std::string key;
        for (const auto& s : segs) key += toText(s) + "|";
        auto [it, inserted] = seen.emplace(key, r);
        if (!inserted) CHECK(it->second == r); // equal data must mean equal reps
    }
}

TEST_CASE("canonical text of representations") {
    Alphabet a = fixtures::standard();
    CHECK(toText(UnitaryRep()) == "1");
    CHECK(toText(UnitaryRep::single(mkSpeh(fixtures::st(a, "r0", 2), 3))) == "u(St(r0,2),3)");
    UnitaryRep mixed = fixtures::rep({mkComplementary(fixtures::st(a, "r1", 1), 2, Rat(1, 4)),
                                      mkSpeh(fixtures::st(a, "r0", 2), 3)});
    CHECK(toText(mixed) == "u(St(r0,2),3) x pi(u(St(r1,1),2),1/4)");
}
