#pragma once

#include "seidelframes/constructions.hpp"
#include "seidelframes/frames.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

/// Parses n lines of n characters from {0,+,-}. LF or CRLF line endings; the
/// final newline is optional. Throws ParseError with 1-based coordinates.
SignatureMatrix parse_signature_text(std::string_view text);

/// LF-terminated lines, no trailing whitespace.
std::string emit_signature_text(const SignatureMatrix& q);

/// Verbatim bytes of the five printed (36,15) signature matrices.
const std::vector<std::string_view>& table2_texts();
std::vector<SignatureMatrix> table2_matrices();

/// -Q, checked to be a 2-uniform signature again (mu -> -mu, k -> n - k).
SignatureMatrix negate_signature(const SignatureMatrix& q);

enum class FrameFamily { Conference, GraphHadamard, GraphOnly, Trivial };

/// "C", "H", "G" or "T".
std::string_view type_tag(FrameFamily family) noexcept;

struct ClassCount {
    int count = 0;
    bool lower_bound = false; // the table lists "count+"
    std::string label() const { return std::to_string(count) + (lower_bound ? "+" : ""); }
};

struct KnownFrameRecord {
    int n = 0;
    int k = 0;
    ClassCount classes;
    FrameFamily family = FrameFamily::Conference;
    bool constructible = false;
    std::optional<ConstructionRecipe> recipe;
    std::vector<std::string> catalog_ids; // e.g. "table2-1"
    std::string note;
};

/// One record per (n, k) of the table of known real 2-uniform frames.
const std::vector<KnownFrameRecord>& known_frames();

/// Table record, or a synthesized trivial record for k = 1 and k = n - 1.
std::optional<KnownFrameRecord> lookup_known_frame(int n, int k);

/// Every signature the record can produce; empty when not constructible.
std::vector<SignatureMatrix> build_known_signatures(const KnownFrameRecord& record);

/// Catalog matrix by id ("table2-1" .. "table2-5"); throws InvalidParameters.
SignatureMatrix catalog_matrix(std::string_view id);

std::string sha256_hex(std::string_view bytes);

} // namespace sf
