#include "speh/alphabet.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace speh {

static bool validToken(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(s[0])) return false;
    for (char c : s)
        if (!alnum(c)) return false;
    return true;
}

const CuspidalSymbol& Alphabet::at(const std::string& id) const {
    auto it = symbols_.find(id);
    if (it == symbols_.end()) fail(errc::unknown_symbol, "cuspidal '" + id + "' is not declared");
    return it->second;
}

bool Alphabet::sigmaSelfDual(const std::string& id) const {
    const CuspidalSymbol& s = at(id);
    return at(s.dual).sigma == id;
}

bool Alphabet::distinguishedBy(const std::string& id, int j) const {
    const CuspidalSymbol& s = at(id);
    return s.parity.has_value() && *s.parity == j;
}

Alphabet Alphabet::withParityFlipped(const std::string& id) const {
    Alphabet copy = *this;
    auto it = copy.symbols_.find(id);
    if (it == copy.symbols_.end()) fail(errc::unknown_symbol, "cuspidal '" + id + "' is not declared");
    if (!it->second.parity.has_value())
        fail(errc::missing_parity, "cuspidal '" + id + "' carries no parity to flip");
    it->second.parity = 1 - *it->second.parity;
    return copy;
}

Alphabet Alphabet::fromSymbols(const std::vector<CuspidalSymbol>& symbols) {
    Alphabet a;
    for (const CuspidalSymbol& s : symbols) {
        if (!validToken(s.id))
            fail(errc::parse_error, "invalid cuspidal id '" + s.id + "'");
        if (s.degree < 1)
            fail(errc::parse_error, "cuspidal '" + s.id + "' must have positive degree");
        if (s.parity && *s.parity != 0 && *s.parity != 1)
            fail(errc::parse_error, "cuspidal '" + s.id + "' has parity outside {0,1}");
        if (!a.symbols_.emplace(s.id, s).second)
            fail(errc::parse_error, "duplicate cuspidal id '" + s.id + "'");
    }
    for (const auto& [id, s] : a.symbols_) {
        for (const std::string& ref : {s.dual, s.sigma})
            if (!a.contains(ref))
                fail(errc::dangling_reference,
                     "cuspidal '" + id + "' references undeclared '" + ref + "'");
    }
    for (const auto& [id, s] : a.symbols_) {
        const CuspidalSymbol& d = a.symbols_.at(s.dual);
        const CuspidalSymbol& g = a.symbols_.at(s.sigma);
        if (d.dual != id)
            fail(errc::broken_involution, "dual is not involutive at '" + id + "'");
        if (g.sigma != id)
            fail(errc::broken_involution, "sigma is not involutive at '" + id + "'");
        if (a.symbols_.at(s.sigma).dual != a.symbols_.at(s.dual).sigma)
            fail(errc::broken_involution, "dual and sigma do not commute at '" + id + "'");
        if (d.degree != s.degree || g.degree != s.degree)
            fail(errc::broken_involution, "dual/sigma change the degree of '" + id + "'");
    }
    for (const auto& [id, s] : a.symbols_) {
        bool selfDual = a.symbols_.at(s.dual).sigma == id;
        if (selfDual && !s.parity)
            fail(errc::missing_parity, "sigma-self-dual cuspidal '" + id + "' needs a parity");
        if (!selfDual && s.parity)
            fail(errc::parity_on_non_self_dual,
                 "cuspidal '" + id + "' is not sigma-self-dual but declares a parity");
    }
    return a;
}

static std::pair<int, int> lineColOf(const std::string& text, std::size_t byte) {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Alphabet loadAlphabet(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = lineColOf(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(errc::parse_error, "malformed JSON: " + std::string(e.what()), line, col);
    }
    if (!doc.is_object() || !doc.contains("cuspidals") || !doc["cuspidals"].is_array())
        fail(errc::parse_error, "expected a top-level object with a \"cuspidals\" array");

    std::vector<CuspidalSymbol> symbols;
    for (const auto& entry : doc["cuspidals"]) {
        if (!entry.is_object())
            fail(errc::parse_error, "cuspidal entries must be objects");
        CuspidalSymbol s;
        for (const char* key : {"id", "dual", "sigma"}) {
            if (!entry.contains(key) || !entry[key].is_string())
                fail(errc::parse_error, std::string("cuspidal entry needs a string \"") + key + "\"");
        }
        s.id = entry["id"].get<std::string>();
        s.dual = entry["dual"].get<std::string>();
        s.sigma = entry["sigma"].get<std::string>();
        if (!entry.contains("degree") || !entry["degree"].is_number_integer())
            fail(errc::parse_error, "cuspidal '" + s.id + "' needs an integer \"degree\"");
        long long degree = entry["degree"].get<long long>();
        if (degree < 1 || degree > 1000000)
            fail(errc::parse_error, "cuspidal '" + s.id + "' has degree outside [1, 1000000]");
        s.degree = static_cast<int>(degree);
        if (entry.contains("parity")) {
            if (!entry["parity"].is_number_integer())
                fail(errc::parse_error,
                     "cuspidal '" + s.id + "': \"parity\" must be an integer, not null");
            long long parity = entry["parity"].get<long long>();
            if (parity != 0 && parity != 1)
                fail(errc::parse_error, "cuspidal '" + s.id + "' has parity outside {0,1}");
            s.parity = static_cast<int>(parity);
        }
        symbols.push_back(std::move(s));
    }
    return Alphabet::fromSymbols(symbols);
}

Alphabet loadAlphabetFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot read alphabet file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return loadAlphabet(buf.str());
}

} // namespace speh
