#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sf {

enum class Errc {
    InvalidInput,
    InvalidParameters,
    NotLeftInvertible,
    NotParseval,
    NotUniform,
    NotTwoUniform,
    NotASignature,
    NotTwoUniformSignature,
    InconsistentParameters,
    NotStronglyRegular,
    SizeLimit,
    BudgetExceeded,
    NotReconstructible,
    Unavailable,
    BadCharacter,
    NotSymmetric,
    NonZeroDiagonal,
    RaggedLines,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failure of a signature text. Row and column are 1-based; a value of 0
/// means "not applicable" for that coordinate.
class ParseError : public Error {
public:
    ParseError(Errc code, int row, int col, const std::string& what)
        : Error(code, what), row_(row), col_(col)
    {
    }

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

} // namespace sf
