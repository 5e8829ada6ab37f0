#pragma once

#include <stdexcept>
#include <string>

namespace speh {

enum class errc {
    parse_error,
    dangling_reference,
    broken_involution,
    parity_on_non_self_dual,
    missing_parity,
    unknown_symbol,
    invalid_endpoints,
    empty_segment,
    non_unitary_segment,
    bad_multiplier,
    alpha_out_of_range,
    not_generic,
    not_self_dual,
    syntax_error,
    type_error,
};

const char* errcName(errc c);

// Every rejected input is thrown as Error. line/col are 1-based and refer to
// the offending position in a textual input; both are 0 when not applicable.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg, int line = 0, int col = 0);

    errc code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    errc code_;
    int line_;
    int col_;
};

[[noreturn]] void fail(errc code, const std::string& msg, int line = 0, int col = 0);

} // namespace speh
