#pragma once

#include <stdexcept>
#include <string>

namespace klr {

enum class errc {
    non_symmetric,
    diagonal_not_positive_even,
    off_diagonal_not_nonpositive_integer,
    zero_unit,
    constraint_violation,
    residual_overrides_forced_entry,
    unknown_label,
    index_out_of_range,
    length_mismatch,
    context_mismatch,
    empty_thick_label,
    color_absent,
    out_of_piece,
    mixed_pieces,
    syntax_error,
    unknown_atom,
    config_error,
};

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::non_symmetric: return "NonSymmetric";
    case errc::diagonal_not_positive_even: return "DiagonalNotPositiveEven";
    case errc::off_diagonal_not_nonpositive_integer: return "OffDiagonalNotNonpositiveInteger";
    case errc::zero_unit: return "ZeroUnit";
    case errc::constraint_violation: return "ConstraintViolation";
    case errc::residual_overrides_forced_entry: return "ResidualOverridesForcedEntry";
    case errc::unknown_label: return "UnknownLabel";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::empty_thick_label: return "EmptyThickLabel";
    case errc::color_absent: return "ColorAbsent";
    case errc::out_of_piece: return "OutOfPiece";
    case errc::mixed_pieces: return "MixedPieces";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_atom: return "UnknownAtom";
    case errc::config_error: return "ConfigError";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    errc code() const { return code_; }

private:
    errc code_;
};

// Parse failures carry the byte offset and what was expected at that point.
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& expected, const std::string& what)
        : error(errc::syntax_error, what + " at offset " + std::to_string(offset)
                                        + " (expected " + expected + ")"),
          offset_(offset), expected_(expected)
    {
    }
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace klr
