#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "speh/distinction.hpp"
#include "speh/dsl.hpp"
#include "speh/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::ordered_json;

namespace {

std::string joinParts(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ' ';
        s += parts[i];
    }
    return s;
}

std::vector<speh::Rat> parseGrid(const std::string& text) {
    std::vector<speh::Rat> out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        auto r = speh::Rat::parse(item);
        if (!r) throw std::runtime_error("bad --alpha-grid entry '" + item + "'");
        out.push_back(*r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct ExprArgs {
    std::string alphabetPath;
    std::vector<std::string> exprParts;
    bool json = false;
};

void addExprOptions(CLI::App* cmd, ExprArgs& args, const char* exprName) {
    cmd->add_option("--alphabet", args.alphabetPath, "cuspidal alphabet JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--json", args.json, "emit JSON");
    cmd->add_option(exprName, args.exprParts, "expression")->required()->expected(-1);
}

struct UniverseArgs {
    std::string alphabetPath;
    bool json = false;
    int maxDegree = 0;
    int maxK = 0;
    std::string alphaGrid;
};

void addUniverseOptions(CLI::App* cmd, UniverseArgs& args) {
    cmd->add_option("--alphabet", args.alphabetPath, "cuspidal alphabet JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--json", args.json, "emit JSON");
    cmd->add_option("--max-degree", args.maxDegree, "total degree bound")->required();
    cmd->add_option("--max-k", args.maxK, "Speh multiplier bound")->required();
    cmd->add_option("--alpha-grid", args.alphaGrid,
                    "comma-separated rationals in (0,1/2), e.g. 1/4,1/3");
}

int runChecked(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"speh-kit: sigma-distinction calculator for unitary representations of GL(n) "
                 "over a quadratic extension of a p-adic field"};
    app.require_subcommand(1);

    ExprArgs checkArgs, traceArgs, canonArgs, deriveArgs, langlandsArgs;
    bool ladder = false;

    auto* cmdCheck = app.add_subcommand("check", "decide sigma-distinction of an expression");
    addExprOptions(cmdCheck, checkArgs, "EXPR");

    auto* cmdTrace = app.add_subcommand("trace", "decide sigma-distinction and print the proof trace");
    addExprOptions(cmdTrace, traceArgs, "EXPR");

    auto* cmdCanon = app.add_subcommand("canonical", "print the canonical form");
    addExprOptions(cmdCanon, canonArgs, "EXPR");

    auto* cmdDerive = app.add_subcommand("derive", "highest shifted derivative");
    addExprOptions(cmdDerive, deriveArgs, "EXPR");
    cmdDerive->add_flag("--ladder", ladder, "print the whole derivative ladder");

    auto* cmdLanglands = app.add_subcommand("langlands", "list the twisted segments with centers");
    addExprOptions(cmdLanglands, langlandsArgs, "EXPR");

    struct {
        std::string alphabetPath;
        bool json = false;
        std::string segment;
        int k = 0;
    } endArgs;
    auto* cmdEnd = app.add_subcommand("end-cs", "subquotients at the alpha=1/2 wall");
    cmdEnd->add_option("--alphabet", endArgs.alphabetPath, "cuspidal alphabet JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmdEnd->add_flag("--json", endArgs.json, "emit JSON");
    cmdEnd->add_option("SEGMENT", endArgs.segment, "unitary segment")->required();
    cmdEnd->add_option("K", endArgs.k, "multiplier, k >= 2")->required();

    UniverseArgs enumArgs;
    auto* cmdEnum = app.add_subcommand("enumerate", "stream the canonical universe, one per line");
    addUniverseOptions(cmdEnum, enumArgs);

    UniverseArgs selfArgs;
    bool serial = false;
    int jobs = 0;
    std::string injectFlip;
    auto* cmdSelf = app.add_subcommand("selfcheck", "run every exhaustive law over the universe");
    addUniverseOptions(cmdSelf, selfArgs);
    cmdSelf->add_flag("--serial", serial, "use the serial reference driver");
    cmdSelf->add_option("--jobs", jobs, "OpenMP thread count (0 = default)");
    cmdSelf
        ->add_option("--inject-parity-flip", injectFlip,
                     "test hook: flip this cuspidal's parity on the engine-side route")
        ->default_str("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmdCheck->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(checkArgs.alphabetPath);
            speh::UnitaryRep rep = speh::lower(speh::parse(joinParts(checkArgs.exprParts), a), a);
            speh::Verdict v = speh::isDistinguished(rep, a);
            if (checkArgs.json) {
                ordered_json j;
                j["version"] = 1;
                j["canonical"] = speh::printCanonical(rep);
                j["distinguished"] = v.value;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (v.value ? "DISTINGUISHED" : "NOT-DISTINGUISHED") << "\n";
            }
            return v.value ? 0 : 1;
        });
    }

    if (cmdTrace->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(traceArgs.alphabetPath);
            speh::UnitaryRep rep = speh::lower(speh::parse(joinParts(traceArgs.exprParts), a), a);
            speh::Verdict v = speh::isDistinguished(rep, a);
            std::cout << (traceArgs.json ? speh::traceToJson(v.trace) + "\n"
                                         : speh::traceToText(v.trace));
            return 0;
        });
    }

    if (cmdCanon->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(canonArgs.alphabetPath);
            speh::UnitaryRep rep = speh::lower(speh::parse(joinParts(canonArgs.exprParts), a), a);
            if (canonArgs.json) {
                ordered_json j;
                j["version"] = 1;
                j["canonical"] = speh::printCanonical(rep);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << speh::printCanonical(rep) << "\n";
            }
            return 0;
        });
    }

    if (cmdDerive->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(deriveArgs.alphabetPath);
            speh::UnitaryRep rep = speh::lower(speh::parse(joinParts(deriveArgs.exprParts), a), a);
            if (ladder) {
                auto steps = speh::derivativeLadder(rep);
                if (deriveArgs.json) {
                    ordered_json j;
                    j["version"] = 1;
                    auto& arr = j["ladder"] = ordered_json::array();
                    for (const auto& s : steps) arr.push_back(speh::printCanonical(s));
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (const auto& s : steps) std::cout << speh::printCanonical(s) << "\n";
                }
            } else {
                speh::UnitaryRep d = speh::highestShiftedDerivative(rep);
                if (deriveArgs.json) {
                    ordered_json j;
                    j["version"] = 1;
                    j["derivative"] = speh::printCanonical(d);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << speh::printCanonical(d) << "\n";
                }
            }
            return 0;
        });
    }

    if (cmdLanglands->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(langlandsArgs.alphabetPath);
            speh::UnitaryRep rep =
                speh::lower(speh::parse(joinParts(langlandsArgs.exprParts), a), a);
            auto segs = speh::langlandsData(rep);
            if (langlandsArgs.json) {
                ordered_json j;
                j["version"] = 1;
                auto& arr = j["segments"] = ordered_json::array();
                for (const auto& s : segs) {
                    ordered_json e;
                    e["center"] = s.center.str();
                    e["segment"] = speh::toText(s);
                    arr.push_back(std::move(e));
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& s : segs)
                    std::cout << s.center.str() << "\t" << speh::toText(s) << "\n";
            }
            return 0;
        });
    }

    if (cmdEnd->parsed()) {
        return runChecked([&] {
            speh::Alphabet a = speh::loadAlphabetFile(endArgs.alphabetPath);
            speh::Segment seg = speh::lowerSegment(speh::parseSegment(endArgs.segment, a), a);
            auto [sideA, sideB] = speh::endOfComplementarySeries(seg, endArgs.k);
            if (endArgs.json) {
                ordered_json j;
                j["version"] = 1;
                j["segment"] = speh::toText(seg);
                j["k"] = endArgs.k;
                j["a"] = speh::printCanonical(sideA);
                j["b"] = speh::printCanonical(sideB);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "A: " << speh::printCanonical(sideA) << "\n"
                          << "B: " << speh::printCanonical(sideB) << "\n";
            }
            return 0;
        });
    }

    if (cmdEnum->parsed()) {
        return runChecked([&] {
            speh::UniverseSpec spec{speh::loadAlphabetFile(enumArgs.alphabetPath),
                                    enumArgs.maxDegree, enumArgs.maxK,
                                    parseGrid(enumArgs.alphaGrid)};
            if (enumArgs.json) {
                ordered_json j;
                j["version"] = 1;
                auto& arr = j["reps"] = ordered_json::array();
                speh::enumerate(spec, [&](const speh::UnitaryRep& r) {
                    arr.push_back(speh::printCanonical(r));
                });
                std::cout << j.dump(2) << "\n";
            } else {
                speh::enumerate(spec, [](const speh::UnitaryRep& r) {
                    std::cout << speh::printCanonical(r) << "\n";
                });
            }
            return 0;
        });
    }

    if (cmdSelf->parsed()) {
        return runChecked([&] {
#ifdef _OPENMP
            if (jobs > 0) omp_set_num_threads(jobs);
#endif
            speh::UniverseSpec spec{speh::loadAlphabetFile(selfArgs.alphabetPath),
                                    selfArgs.maxDegree, selfArgs.maxK,
                                    parseGrid(selfArgs.alphaGrid)};
            speh::CrossCheckOptions opts;
            if (!injectFlip.empty()) opts.injectParityFlip = injectFlip;
            speh::CrossCheckReport report =
                serial ? speh::crossCheckSerial(spec, opts) : speh::crossCheck(spec, opts);
            if (selfArgs.json)
                std::cout << report.toJson(spec) << "\n";
            else
                std::cout << "universe: " << report.universeSize << " representations\n"
                          << report.summary();
            return report.ok() ? 0 : 1;
        });
    }

    return 2;
}
