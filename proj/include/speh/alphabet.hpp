#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "speh/error.hpp"

namespace speh {

// An abstract unitary cuspidal: an opaque label plus the structure the
// calculus reads off it. `parity` is the j in {0,1} such that the cuspidal is
// (sigma, eta^j)-distinguished; it is declared input data, present exactly
// when the symbol is sigma-self-dual (sigma(dual(rho)) == rho).
struct CuspidalSymbol {
    std::string id;
    int degree = 1;
    std::string dual;
    std::string sigma;
    std::optional<int> parity;
};

class Alphabet {
public:
    Alphabet() = default;

    // Validates involutions, commutation, degree preservation and the parity
    // presence rule; throws Error on the first violation.
    static Alphabet fromSymbols(const std::vector<CuspidalSymbol>& symbols);

    bool contains(const std::string& id) const { return symbols_.count(id) != 0; }
    const CuspidalSymbol& at(const std::string& id) const;
    const std::map<std::string, CuspidalSymbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

    // sigma(dual(rho)) == rho
    bool sigmaSelfDual(const std::string& id) const;

    // true iff rho carries a parity and it equals j; false for non-self-dual rho
    bool distinguishedBy(const std::string& id, int j) const;

    // Test-only hook: returns a copy with the parity of `id` toggled, skipping
    // re-validation. Used by the self-check harness to verify that the
    // property sweeps are able to report failures at all.
    Alphabet withParityFlipped(const std::string& id) const;

private:
    std::map<std::string, CuspidalSymbol> symbols_;
};

// Parses and validates the JSON alphabet format:
//   {"cuspidals":[{"id":"r0","degree":1,"dual":"r0","sigma":"r0","parity":0}, ...]}
// `parity` must be omitted for non-self-dual symbols. Duplicate ids, type
// mismatches and malformed JSON are ParseError (with line/col for the latter).
Alphabet loadAlphabet(const std::string& text);
Alphabet loadAlphabetFile(const std::string& path);

} // namespace speh
