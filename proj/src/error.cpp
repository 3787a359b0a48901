#include "seidelframes/error.hpp"

namespace sf {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NotLeftInvertible: return "NotLeftInvertible";
    case Errc::NotParseval: return "NotParseval";
    case Errc::NotUniform: return "NotUniform";
    case Errc::NotTwoUniform: return "NotTwoUniform";
    case Errc::NotASignature: return "NotASignature";
    case Errc::NotTwoUniformSignature: return "NotTwoUniformSignature";
    case Errc::InconsistentParameters: return "InconsistentParameters";
    case Errc::NotStronglyRegular: return "NotStronglyRegular";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotReconstructible: return "NotReconstructible";
    case Errc::Unavailable: return "Unavailable";
    case Errc::BadCharacter: return "BadCharacter";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NonZeroDiagonal: return "NonZeroDiagonal";
    case Errc::RaggedLines: return "RaggedLines";
    }
    return "Unknown";
}

} // namespace sf
