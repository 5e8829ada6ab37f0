#include "speh/error.hpp"

namespace speh {

const char* errcName(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::dangling_reference: return "DanglingReference";
        case errc::broken_involution: return "BrokenInvolution";
        case errc::parity_on_non_self_dual: return "ParityOnNonSelfDual";
        case errc::missing_parity: return "MissingParity";
        case errc::unknown_symbol: return "UnknownSymbol";
        case errc::invalid_endpoints: return "InvalidEndpoints";
        case errc::empty_segment: return "EmptySegment";
        case errc::non_unitary_segment: return "NonUnitarySegment";
        case errc::bad_multiplier: return "BadMultiplier";
        case errc::alpha_out_of_range: return "AlphaOutOfRange";
        case errc::not_generic: return "NotGeneric";
        case errc::not_self_dual: return "NotSelfDual";
        case errc::syntax_error: return "SyntaxError";
        case errc::type_error: return "TypeError";
    }
    return "Error";
}

static std::string format(errc code, const std::string& msg, int line, int col) {
    std::string s = errcName(code);
    s += ": ";
    s += msg;
    if (line > 0) {
        s += " (line ";
        s += std::to_string(line);
        s += ", col ";
        s += std::to_string(col);
        s += ")";
    }
    return s;
}

Error::Error(errc code, const std::string& msg, int line, int col)
    : std::runtime_error(format(code, msg, line, col)), code_(code), line_(line), col_(col) {}

void fail(errc code, const std::string& msg, int line, int col) {
    throw Error(code, msg, line, col);
}

} // namespace speh
