#include "doctest.h"

#include "fixtures.hpp"
#include "speh/segment.hpp"

using namespace speh;

TEST_CASE("segments from endpoints") {
    Alphabet a = fixtures::standard();
    const CuspidalSymbol& r0 = a.at("r0");

    Segment s = fromEndpoints(r0, Rat(-1, 2), Rat(1, 2));
    CHECK(s == fixtures::st(a, "r0", 2));
    CHECK(s.center == Rat(0));

    CHECK(fromEndpoints(r0, Rat(0), Rat(0)) == fixtures::st(a, "r0", 1));

    Segment twisted = fromEndpoints(r0, Rat(1), Rat(2));
    CHECK(twisted.length == 2);
    CHECK(twisted.center == Rat(3, 2));

    CHECK_THROWS_AS((void)fromEndpoints(r0, Rat(1), Rat(0)), Error);
    try {
        (void)fromEndpoints(r0, Rat(0), Rat(1, 3));
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_endpoints);
    }
}

TEST_CASE("up and down walk the ladder of lengths") {
    Alphabet a = fixtures::standard();
    Segment s1 = fixtures::st(a, "r0", 1);
    CHECK(up(s1) == fixtures::st(a, "r0", 2));
    CHECK(down(s1) == trivialSegment());
    CHECK(down(up(s1)) == s1);
    CHECK(trivialSegment().degree() == 0);
    CHECK_THROWS_AS((void)down(trivialSegment()), Error);
    CHECK_THROWS_AS((void)up(trivialSegment()), Error);
}

TEST_CASE("involutions and twists on segments") {
    Alphabet a = fixtures::standard();
    Segment s = fixtures::st(a, "r0", 2, Rat(1, 2));
    Segment d = dualSeg(s, a);
    CHECK(d.center == Rat(-1, 2));
    CHECK(d.length == 2);
    CHECK(dualSeg(d, a) == s);

    CHECK(sigmaSeg(fixtures::st(a, "t", 3), a) == fixtures::st(a, "ts", 3));
    CHECK(twist(twist(fixtures::st(a, "r0", 1), Rat(1, 2)), Rat(-1, 2)) ==
          fixtures::st(a, "r0", 1));
    CHECK(dualSeg(trivialSegment(), a) == trivialSegment());
}

TEST_CASE("segment distinction follows the declared parity") {
    Alphabet a = fixtures::standard();
    CHECK(segmentDistinguished(fixtures::st(a, "r0", 1), a));
    CHECK(!segmentDistinguished(fixtures::st(a, "r0", 2), a));
    CHECK(!segmentDistinguished(fixtures::st(a, "r0", 1, Rat(1, 3)), a));
    CHECK(segmentEtaDistinguished(fixtures::st(a, "r0", 2), a));
    CHECK(!segmentEtaDistinguished(fixtures::st(a, "r0", 1), a));
    CHECK(!segmentEtaDistinguished(fixtures::st(a, "t", 5), a));
    // r1 declares parity 1: even lengths are sigma-distinguished
    CHECK(segmentDistinguished(fixtures::st(a, "r1", 2), a));
    CHECK(!segmentDistinguished(fixtures::st(a, "r1", 1), a));
    CHECK_THROWS_AS((void)segmentDistinguished(trivialSegment(), a), Error);
    CHECK_THROWS_AS((void)segmentEtaDistinguished(trivialSegment(), a), Error);
}

TEST_CASE("alternation and exclusivity across the enumerated segments") {
    Alphabet a = fixtures::standard();
    for (const auto& [id, sym] : a.symbols()) {
        for (int l = 1; l * sym.degree <= 12; ++l) {
            Segment s = steinberg(sym, l);
            CHECK(segmentDistinguished(s, a) == segmentEtaDistinguished(up(s), a));
            if (a.sigmaSelfDual(id))
                CHECK(segmentDistinguished(s, a) != segmentEtaDistinguished(s, a));
            if (segmentDistinguished(s, a)) CHECK(sigmaSeg(dualSeg(s, a), a) == s);
            CHECK(dualSeg(sigmaSeg(s, a), a) == sigmaSeg(dualSeg(s, a), a));
            CHECK(dualSeg(s, a).degree() == s.degree());
            CHECK(sigmaSeg(s, a).length == s.length);
        }
    }
}

TEST_CASE("every length-0 segment is the same trivial segment") {
    Segment stray{"r0", 1, 0, Rat(5)};
    CHECK(stray == trivialSegment());
    CHECK(!segmentLess(stray, trivialSegment()));
    CHECK(!segmentLess(trivialSegment(), stray));
    Alphabet a = fixtures::standard();
    CHECK(segmentLess(trivialSegment(), fixtures::st(a, "r0", 1)));
}

TEST_CASE("segment text forms") {
    Alphabet a = fixtures::standard();
    CHECK(toText(fixtures::st(a, "r0", 2)) == "St(r0,2)");
    CHECK(toText(fixtures::st(a, "r0", 1, Rat(-1, 2))) == "nu^{-1/2}*St(r0,1)");
    CHECK(toText(trivialSegment()) == "1");
}
