#include "speh/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace speh {

void validateSpec(const UniverseSpec& spec) {
    if (spec.maxDegree < 0) throw std::invalid_argument("maxDegree must be >= 0");
    if (spec.maxK < 0) throw std::invalid_argument("maxK must be >= 0");
    for (const Rat& a : spec.alphaGrid)
        if (!(Rat(0) < a && a < Rat(1, 2)))
            fail(errc::alpha_out_of_range,
                 "alpha grid value " + a.str() + " lies outside (0,1/2)");
}

std::vector<Factor> factorUniverse(const UniverseSpec& spec) {
    validateSpec(spec);
    std::vector<Rat> grid = spec.alphaGrid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<Factor> out;
    for (const auto& [id, sym] : spec.alphabet.symbols()) {
        for (int l = 1; l * sym.degree <= spec.maxDegree; ++l) {
            Segment seg = steinberg(sym, l);
            for (int k = 1; k <= spec.maxK && l * k * sym.degree <= spec.maxDegree; ++k) {
                out.push_back(mkSpeh(seg, k));
                if (2 * l * k * sym.degree <= spec.maxDegree)
                    for (const Rat& alpha : grid) out.push_back(mkComplementary(seg, k, alpha));
            }
        }
    }
    std::sort(out.begin(), out.end(), factorLess);
    return out;
}

namespace {

// Pre-order walk over non-decreasing type-index sequences bounded by total
// degree; emission order is lexicographic on the sequences. Types are sorted
// canonically, so their degrees are non-decreasing and the scan can stop at
// the first type that no longer fits.
template <class Emit>
void walkUniverse(const std::vector<int>& typeDeg, int remaining, std::size_t startType,
                  std::vector<std::uint16_t>& stack, Emit&& emit) {
    emit(stack);
    for (std::size_t t = startType; t < typeDeg.size(); ++t) {
        if (typeDeg[t] > remaining) break;
        stack.push_back(static_cast<std::uint16_t>(t));
        walkUniverse(typeDeg, remaining - typeDeg[t], t, stack, emit);
        stack.pop_back();
    }
}

} // namespace

void enumerate(const UniverseSpec& spec, const std::function<void(const UnitaryRep&)>& emit) {
    std::vector<Factor> types = factorUniverse(spec);
    std::vector<int> typeDeg(types.size());
    for (std::size_t i = 0; i < types.size(); ++i) typeDeg[i] = degree(types[i]);

    std::vector<std::uint16_t> stack;
    walkUniverse(typeDeg, spec.maxDegree, 0, stack, [&](const std::vector<std::uint16_t>& ids) {
        std::vector<Factor> fs;
        fs.reserve(ids.size());
        for (std::uint16_t t : ids) fs.push_back(types[t]);
        emit(UnitaryRep::fromSorted(std::move(fs)));
    });
}

std::vector<UnitaryRep> enumerateAll(const UniverseSpec& spec) {
    std::vector<UnitaryRep> out;
    enumerate(spec, [&](const UnitaryRep& r) { out.push_back(r); });
    return out;
}

Universe Universe::build(const UniverseSpec& spec) {
    Universe u;
    if (spec.maxDegree > 255)
        throw std::invalid_argument("maxDegree above 255 is not supported");
    u.types_ = factorUniverse(spec);
    if (u.types_.size() > std::numeric_limits<std::uint16_t>::max())
        throw std::invalid_argument("factor universe too large for compact storage");
    u.typeDegree_.resize(u.types_.size());
    for (std::size_t i = 0; i < u.types_.size(); ++i) u.typeDegree_[i] = degree(u.types_[i]);
    u.byDegree_.assign(spec.maxDegree + 1, {});

    std::vector<std::uint16_t> stack;
    walkUniverse(u.typeDegree_, spec.maxDegree, 0, stack,
                 [&](const std::vector<std::uint16_t>& ids) {
                     int deg = 0;
                     for (std::uint16_t t : ids) deg += u.typeDegree_[t];
                     auto idx = static_cast<std::uint32_t>(u.offsets_.size() - 1);
                     u.seq_.insert(u.seq_.end(), ids.begin(), ids.end());
                     u.offsets_.push_back(static_cast<std::uint32_t>(u.seq_.size()));
                     u.repDegree_.push_back(static_cast<std::uint8_t>(deg));
                     u.posInDegree_.push_back(static_cast<std::uint32_t>(u.byDegree_[deg].size()));
                     u.byDegree_[deg].push_back(idx);
                 });
    return u;
}

UnitaryRep Universe::materialize(std::size_t i) const {
    std::vector<Factor> fs;
    auto span = ids(i);
    fs.reserve(span.size());
    for (std::uint16_t t : span) fs.push_back(types_[t]);
    return UnitaryRep::fromSorted(std::move(fs));
}

bool matchingOracle(const UnitaryRep& r, const Alphabet& a) {
    const auto& fs = r.factors();
    const std::size_t n = fs.size();
    std::vector<Factor> partner;
    partner.reserve(n);
    for (const Factor& f : fs) partner.push_back(sigmaFactor(dualFactor(f, a), a));
    std::vector<char> used(n, 0);

    // Equal factors are interchangeable, so trying one representative
    // candidate per branch keeps the search exhaustive.
    std::function<bool()> search = [&]() -> bool {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) return true;
        used[i] = 1;
        if (partner[i] == fs[i] && search()) return true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j] || !(fs[j] == partner[i])) continue;
            used[j] = 1;
            if (search()) return true;
            used[j] = 0;
            break;
        }
        used[i] = 0;
        return false;
    };
    return search();
}

bool CrossCheckReport::ok() const {
    for (const PropertyReport& p : properties)
        if (!p.failures.empty()) return false;
    return true;
}

std::string CrossCheckReport::toJson(const UniverseSpec& spec) const {
    nlohmann::ordered_json j;
    j["version"] = 1;
    auto& s = j["spec"];
    auto& ids = s["alphabet"] = nlohmann::ordered_json::array();
    for (const auto& [id, sym] : spec.alphabet.symbols()) ids.push_back(id);
    s["maxDegree"] = spec.maxDegree;
    s["maxK"] = spec.maxK;
    auto& grid = s["alphaGrid"] = nlohmann::ordered_json::array();
    for (const Rat& a : spec.alphaGrid) grid.push_back(a.str());
    j["universe"] = universeSize;
    auto& props = j["properties"] = nlohmann::ordered_json::array();
    for (const PropertyReport& p : properties) {
        nlohmann::ordered_json e;
        e["name"] = p.name;
        e["instances"] = p.instances;
        auto& fails = e["failures"] = nlohmann::ordered_json::array();
        for (const Counterexample& c : p.failures) {
            nlohmann::ordered_json f;
            f["instance"] = c.instance;
            f["subject"] = c.subject;
            f["detail"] = c.detail;
            fails.push_back(std::move(f));
        }
        props.push_back(std::move(e));
    }
    return j.dump(2);
}

std::string CrossCheckReport::summary() const {
    std::ostringstream out;
    for (const PropertyReport& p : properties) {
        if (p.failures.empty()) {
            out << "ok   " << p.name << " (" << p.instances << " instances)\n";
        } else {
            const Counterexample& c = p.failures.front();
            out << "FAIL " << p.name << " (" << p.instances << " instances): " << c.subject
                << " -- " << c.detail << "\n";
        }
    }
    out << (ok() ? "self-check passed" : "self-check FAILED") << "\n";
    return out.str();
}

namespace {

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

struct Failure {
    std::uint64_t rank = kNoFailure;
    std::string subject;
    std::string detail;
};

void keepMin(Failure& best, Failure&& candidate) {
    if (candidate.rank < best.rank) best = std::move(candidate);
}

// Evaluates `eval` over 0..count-1 and keeps the smallest failing index.
// The serial path stops at the first failure (scan order is ascending, so it
// already is the minimal one); the parallel path reduces per-thread minima.
template <class Eval>
PropertyReport runIndexedSweep(std::string name, std::uint64_t count, bool parallel, Eval&& eval) {
    PropertyReport report;
    report.name = std::move(name);
    report.instances = count;
    Failure best;

#ifdef _OPENMP
    if (parallel && count > 1) {
#pragma omp parallel
        {
            Failure mine;
            const auto n = static_cast<long long>(count);
#pragma omp for schedule(dynamic, 256)
            for (long long i = 0; i < n; ++i) {
                std::string subject;
                std::string detail;
                if (!eval(static_cast<std::uint64_t>(i), subject, detail))
                    keepMin(mine, {static_cast<std::uint64_t>(i), std::move(subject),
                                   std::move(detail)});
            }
#pragma omp critical
            keepMin(best, std::move(mine));
        }
    } else
#endif
    {
        for (std::uint64_t i = 0; i < count; ++i) {
            std::string subject;
            std::string detail;
            if (!eval(i, subject, detail)) {
                best = {i, std::move(subject), std::move(detail)};
                break;
            }
        }
    }
    if (best.rank != kNoFailure)
        report.failures.push_back({best.rank, std::move(best.subject), std::move(best.detail)});
    return report;
}

// Unordered pairs (a, b) with degree(a) + degree(b) <= maxDegree, visited as:
// b runs over the whole universe, a over representations of degree at most
// min(deg b, maxDegree - deg b) — i.e. the smaller-degree member, restricted
// to index <= b within equal degree. makeB builds a per-b context once.
template <class MakeB, class Eval>
PropertyReport runPairSweep(std::string name, const Universe& u, int maxDegree, bool parallel,
                            MakeB&& makeB, Eval&& eval) {
    const auto& byDeg = u.byDegree();
    const auto& pos = u.posInDegree();
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(maxDegree) + 2, 0);
    for (int d = 0; d <= maxDegree; ++d) prefix[d + 1] = prefix[d] + byDeg[d].size();

    const std::uint64_t n = u.size();
    std::uint64_t count = 0;
    for (std::uint64_t b = 0; b < n; ++b) {
        int db = u.degreeOf(b);
        if (db <= maxDegree - db)
            count += prefix[db] + pos[b] + 1;
        else
            count += prefix[maxDegree - db + 1];
    }

    PropertyReport report;
    report.name = std::move(name);
    report.instances = count;
    Failure best;

    auto scanB = [&](std::uint64_t b, Failure& sink) {
        const int db = u.degreeOf(b);
        const int cap = maxDegree - db;
        auto bctx = makeB(static_cast<std::uint32_t>(b));
        std::uint64_t inner = 0;
        auto runOne = [&](std::uint32_t aIdx) {
            std::string subject;
            std::string detail;
            std::uint64_t rank = b * (n + 1) + inner;
            ++inner;
            if (!eval(aIdx, bctx, static_cast<std::uint32_t>(b), subject, detail))
                keepMin(sink, {rank, std::move(subject), std::move(detail)});
            return sink.rank != kNoFailure;
        };
        const int fullMax = std::min(db - 1, cap);
        for (int d = 0; d <= fullMax; ++d)
            for (std::uint32_t aIdx : byDeg[d])
                if (runOne(aIdx)) return;
        if (db <= cap) {
            const auto& list = byDeg[db];
            for (std::uint32_t p = 0; p <= pos[b]; ++p)
                if (runOne(list[p])) return;
        }
    };

#ifdef _OPENMP
    if (parallel && n > 1) {
#pragma omp parallel
        {
            Failure mine;
#pragma omp for schedule(dynamic, 64)
            for (long long b = 0; b < static_cast<long long>(n); ++b) {
                Failure local;
                scanB(static_cast<std::uint64_t>(b), local);
                keepMin(mine, std::move(local));
            }
#pragma omp critical
            keepMin(best, std::move(mine));
        }
    } else
#endif
    {
        for (std::uint64_t b = 0; b < n && best.rank == kNoFailure; ++b) scanB(b, best);
    }
    if (best.rank != kNoFailure)
        report.failures.push_back({best.rank, std::move(best.subject), std::move(best.detail)});
    return report;
}

template <class Fn>
void forEachIndex(std::uint64_t n, bool parallel, Fn&& fn) {
#ifdef _OPENMP
    if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 512)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::uint64_t>(i));
        return;
    }
#endif
    (void)parallel;
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
}

std::string describe(bool b) {
    return b ? "true" : "false";
}

CrossCheckReport crossCheckImpl(const UniverseSpec& spec, const CrossCheckOptions& opts,
                                bool parallel) {
    validateSpec(spec);
    const Alphabet& ref = spec.alphabet;
    Alphabet engStorage;
    const Alphabet* engPtr = &ref;
    if (opts.injectParityFlip) {
        engStorage = ref.withParityFlipped(*opts.injectParityFlip);
        engPtr = &engStorage;
    }
    const Alphabet& eng = *engPtr;

    const Universe u = Universe::build(spec);
    const std::uint64_t n = u.size();
    const int maxDegree = spec.maxDegree;

    // unitary segments within the degree bound, ordered by (rho, length)
    std::vector<Segment> segs;
    for (const auto& [id, sym] : ref.symbols())
        for (int l = 1; l * sym.degree <= maxDegree; ++l) segs.push_back(steinberg(sym, l));

    std::vector<const SpehFactor*> spehTypes;
    for (const Factor& f : u.types())
        if (const auto* s = std::get_if<SpehFactor>(&f)) spehTypes.push_back(s);

    // engine-side distinction verdict per representation, shared by several sweeps
    std::vector<char> distEng(n, 0);
    forEachIndex(n, parallel, [&](std::uint64_t i) {
        distEng[i] = isDistinguishedValue(u.materialize(i), eng) ? 1 : 0;
    });

    // cache for the smaller member of every pair (degree <= maxDegree/2)
    struct SmallEntry {
        UnitaryRep rep;
        UnitaryRep hsd;
    };
    std::vector<std::int32_t> smallSlot(n, -1);
    std::vector<SmallEntry> smalls;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (2 * u.degreeOf(i) > maxDegree) continue;
        UnitaryRep r = u.materialize(i);
        UnitaryRep h = highestShiftedDerivative(r);
        smallSlot[i] = static_cast<std::int32_t>(smalls.size());
        smalls.push_back({std::move(r), std::move(h)});
    }

    CrossCheckReport report;
    report.universeSize = n;

    report.properties.push_back(runIndexedSweep(
        "alternation", segs.size(), parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            const Segment& s = segs[i];
            bool sd = segmentDistinguished(s, eng);
            bool upEta = segmentEtaDistinguished(up(s), ref);
            if (sd != upEta) {
                subject = toText(s);
                detail = "sigma-distinguished=" + describe(sd) +
                         " but eta-distinction one step up=" + describe(upEta);
                return false;
            }
            if (ref.sigmaSelfDual(s.rho)) {
                bool ed = segmentEtaDistinguished(s, ref);
                if (sd == ed) {
                    subject = toText(s);
                    detail = "sigma and eta distinction must differ on self-dual segments, both " +
                             describe(sd);
                    return false;
                }
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "dichotomy-exclusivity", spehTypes.size(), parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            const SpehFactor& f = *spehTypes[i];
            if (!factorSigmaSelfDual(Factor{f}, ref)) return true;
            bool sd = segmentDistinguished(f.delta, ref);
            bool ed = segmentEtaDistinguished(f.delta, ref);
            Dichotomy d = dichotomy(f, eng);
            if (sd == ed || ((d == Dichotomy::SIGMA) != sd)) {
                subject = toText(Factor{f});
                detail = "dichotomy=" + std::string(d == Dichotomy::SIGMA ? "SIGMA" : "ETA") +
                         " segment sigma=" + describe(sd) + " eta=" + describe(ed);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "canonical-idempotence", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            UnitaryRep again(std::vector<Factor>(r.factors()));
            if (!(again == r) || r.degree() != u.degreeOf(i)) {
                subject = toText(r);
                detail = "re-canonicalization changed the stored form";
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "involution-laws", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            UnitaryRep d = dualRep(r, ref);
            UnitaryRep s = sigmaRep(r, ref);
            bool ok = dualRep(d, ref) == r && sigmaRep(s, ref) == r &&
                      sigmaRep(d, ref) == dualRep(s, ref) && d.degree() == r.degree() &&
                      s.degree() == r.degree() &&
                      isSigmaSelfDual(product(r, sigmaRep(d, ref)), ref);
            if (!ok) {
                subject = toText(r);
                detail = "dual/sigma fail the involution, commutation or pairing laws";
            }
            return ok;
        }));

    report.properties.push_back(runIndexedSweep(
        "self-duality-oracle", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            bool fast = isSigmaSelfDual(r, eng);
            bool slow = matchingOracle(r, ref);
            if (fast != slow) {
                subject = toText(r);
                detail = "isSigmaSelfDual=" + describe(fast) + " matchingOracle=" + describe(slow);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "necessary-condition", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            if (distEng[i] && !isSigmaSelfDual(u.materialize(i), ref)) {
                subject = toText(u.materialize(i));
                detail = "distinguished but not sigma-self-dual";
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "oracle-equivalence", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            bool checker = inductiveCheckerValue(r, ref);
            if (checker != (distEng[i] != 0)) {
                subject = toText(r);
                detail = "isDistinguished=" + describe(distEng[i]) +
                         " inductiveChecker=" + describe(checker);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "speh-reduction", segs.size() * static_cast<std::uint64_t>(spec.maxK), parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            const Segment& s = segs[i / spec.maxK];
            int k = static_cast<int>(i % spec.maxK) + 1;
            bool whole = isDistinguishedValue(UnitaryRep::single(mkSpeh(s, k)), eng);
            bool seg = segmentDistinguished(s, ref);
            if (whole != seg) {
                subject = "u(" + toText(s) + "," + std::to_string(k) + ")";
                detail = "Speh verdict " + describe(whole) + " but segment verdict " + describe(seg);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "uniform-product", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            if (r.empty()) return true;
            int k = 0;
            for (const Factor& f : r.factors()) {
                const auto* s = std::get_if<SpehFactor>(&f);
                if (!s || (k != 0 && s->k != k)) return true;
                k = s->k;
            }
            if (!distEng[i]) return true;
            std::vector<Factor> flat;
            for (const Factor& f : r.factors())
                flat.push_back(SpehFactor{std::get<SpehFactor>(f).delta, 1});
            UnitaryRep flattened{std::move(flat)};
            if (!isDistinguishedValue(flattened, ref)) {
                subject = toText(r);
                detail = "distinguished, but the k=1 product " + toText(flattened) + " is not";
                return false;
            }
            return true;
        }));

    report.properties.push_back(runIndexedSweep(
        "derivative-ladder", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            auto ladder = derivativeLadder(r);
            int maxK = 0;
            bool generic = true;
            for (const Factor& f : r.factors()) {
                maxK = std::max(maxK, multiplierOf(f));
                generic = generic && multiplierOf(f) == 1;
            }
            std::size_t expected = r.empty() ? 1 : static_cast<std::size_t>(maxK) + 1;
            bool ok = ladder.size() == expected && ladder.back().empty() &&
                      (highestShiftedDerivative(r).empty() == (generic || r.empty()));
            for (std::size_t s = 0; ok && s + 1 < ladder.size(); ++s)
                ok = ladder[s + 1].degree() < ladder[s].degree() || ladder[s].empty();
            if (!ok) {
                subject = toText(r);
                detail = "derivative ladder has the wrong shape (length " +
                         std::to_string(ladder.size()) + ")";
            }
            return ok;
        }));

    report.properties.push_back(runIndexedSweep(
        "derivative-rigid-preservation", n, parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            UnitaryRep r = u.materialize(i);
            if (r.empty()) return true;
            for (const Factor& f : r.factors())
                if (multiplierOf(f) < 2) return true;
            bool before = isSigmaInducedValue(r, eng);
            bool after = isSigmaInducedValue(highestShiftedDerivative(r), ref);
            if (before != after) {
                subject = toText(r);
                detail = "sigma-induced " + describe(before) + " but derivative gives " +
                         describe(after);
                return false;
            }
            return true;
        }));

    const int maxEndK = std::max(0, spec.maxK - 1);
    report.properties.push_back(runIndexedSweep(
        "end-of-series", segs.size() * static_cast<std::uint64_t>(maxEndK), parallel,
        [&](std::uint64_t i, std::string& subject, std::string& detail) {
            const Segment& s = segs[i / maxEndK];
            int k = static_cast<int>(i % maxEndK) + 2;
            if (!segmentDistinguished(s, ref)) return true;
            auto [sideA, sideB] = endOfComplementarySeries(s, k);
            bool degreesOk =
                sideA.degree() == 2 * k * s.degree() && sideB.degree() == 2 * k * s.degree();
            bool verdictOk = isDistinguishedValue(sideB, eng) && !isDistinguishedValue(sideA, eng);
            if (!degreesOk || !verdictOk) {
                subject = "u(" + toText(s) + "," + std::to_string(k) + ") at alpha=1/2";
                detail = std::string(degreesOk ? "verdicts" : "degrees") +
                         " wrong: A=" + toText(sideA) + " B=" + toText(sideB);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runPairSweep(
        "derivative-commutation", u, maxDegree, parallel,
        [&](std::uint32_t b) {
            UnitaryRep r = u.materialize(b);
            UnitaryRep h = highestShiftedDerivative(r);
            return SmallEntry{std::move(r), std::move(h)};
        },
        [&](std::uint32_t a, const SmallEntry& b, std::uint32_t, std::string& subject,
            std::string& detail) {
            const SmallEntry& sa = smalls[smallSlot[a]];
            UnitaryRep lhs = highestShiftedDerivative(product(sa.rep, b.rep));
            UnitaryRep rhs = product(sa.hsd, b.hsd);
            if (!(lhs == rhs)) {
                subject = toText(sa.rep) + "  x  " + toText(b.rep);
                detail = "derivative of the product is " + toText(lhs) +
                         ", product of derivatives is " + toText(rhs);
                return false;
            }
            return true;
        }));

    report.properties.push_back(runPairSweep(
        "product-closure", u, maxDegree, parallel,
        [&](std::uint32_t b) { return u.materialize(b); },
        [&](std::uint32_t a, const UnitaryRep& bRep, std::uint32_t b, std::string& subject,
            std::string& detail) {
            if (!distEng[a] || !distEng[b]) return true;
            UnitaryRep prod = product(smalls[smallSlot[a]].rep, bRep);
            if (!isDistinguishedValue(prod, ref)) {
                subject = toText(smalls[smallSlot[a]].rep) + "  x  " + toText(bRep);
                detail = "both factors distinguished but the product " + toText(prod) + " is not";
                return false;
            }
            return true;
        }));

    return report;
}

} // namespace

CrossCheckReport crossCheck(const UniverseSpec& spec, const CrossCheckOptions& opts) {
    return crossCheckImpl(spec, opts, true);
}

CrossCheckReport crossCheckSerial(const UniverseSpec& spec, const CrossCheckOptions& opts) {
    return crossCheckImpl(spec, opts, false);
}

} // namespace speh
