#include "seidelframes/catalog.hpp"

#include "seidelframes/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <string>

namespace sf {

namespace detail {
const std::vector<std::string_view>& embedded_table2();
}

SignatureMatrix parse_signature_text(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        if (!line.empty() && line.back() == '\r' && end != std::string_view::npos)
            line.remove_suffix(1);
        lines.push_back(line);
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    const int n = static_cast<int>(lines.size());
    if (n == 0)
        throw ParseError(Errc::RaggedLines, 0, 0, "empty signature text");

    for (int r = 0; r < n; ++r)
        for (std::size_t c = 0; c < lines[r].size(); ++c) {
            const char ch = lines[r][c];
            if (ch != '0' && ch != '+' && ch != '-')
                throw ParseError(Errc::BadCharacter, r + 1, static_cast<int>(c) + 1,
                                 "unexpected character at row " + std::to_string(r + 1) + ", column " +
                                     std::to_string(c + 1));
        }
    for (int r = 0; r < n; ++r)
        if (static_cast<int>(lines[r].size()) != n)
            throw ParseError(Errc::RaggedLines, r + 1, 0,
                             "row " + std::to_string(r + 1) + " has " + std::to_string(lines[r].size()) +
                                 " characters, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (lines[i][i] != '0')
            throw ParseError(Errc::NonZeroDiagonal, i + 1, i + 1, "diagonal entry " + std::to_string(i + 1) + " is not 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && lines[i][j] == '0')
                throw ParseError(Errc::BadCharacter, i + 1, j + 1,
                                 "off-diagonal 0 at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lines[i][j] != lines[j][i])
                throw ParseError(Errc::NotSymmetric, i + 1, j + 1,
                                 "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                                     std::to_string(j + 1) + "," + std::to_string(i + 1) + ") differ");

    IntMatrix q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q(i, j) = lines[i][j] == '+' ? 1 : lines[i][j] == '-' ? -1 : 0;
    return SignatureMatrix(std::move(q));
}

std::string emit_signature_text(const SignatureMatrix& q)
{
    const int n = q.order();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out.push_back(q(i, j) == 0 ? '0' : q(i, j) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

const std::vector<std::string_view>& table2_texts()
{
    return detail::embedded_table2();
}

std::vector<SignatureMatrix> table2_matrices()
{
    std::vector<SignatureMatrix> out;
    for (auto text : table2_texts())
        out.push_back(parse_signature_text(text));
    return out;
}

SignatureMatrix negate_signature(const SignatureMatrix& q)
{
    SignatureMatrix neg = q.negated();
    signature_parameters(neg);
    return neg;
}

std::string_view type_tag(FrameFamily family) noexcept
{
    switch (family) {
    case FrameFamily::Conference: return "C";
    case FrameFamily::GraphHadamard: return "H";
    case FrameFamily::GraphOnly: return "G";
    case FrameFamily::Trivial: return "T";
    }
    return "?";
}

namespace {

KnownFrameRecord row(int n, int k, int count, bool plus, FrameFamily family)
{
    KnownFrameRecord r;
    r.n = n;
    r.k = k;
    r.classes = {count, plus};
    r.family = family;
    return r;
}

KnownFrameRecord paley(KnownFrameRecord r)
{
    r.constructible = true;
    r.recipe = ConstructionRecipe{ConstructionKind::PaleyConference, r.n - 1};
    return r;
}

KnownFrameRecord not_built(KnownFrameRecord r, std::string note)
{
    r.note = std::move(note);
    return r;
}

std::vector<KnownFrameRecord> make_table()
{
    using F = FrameFamily;
    std::vector<KnownFrameRecord> t;
    t.push_back(paley(row(6, 3, 1, false, F::Conference)));
    t.push_back(not_built(row(10, 5, 1, false, F::Conference), "needs a Paley conference matrix over GF(9)"));
    t.push_back(paley(row(14, 7, 1, false, F::Conference)));

    auto h16 = row(16, 6, 1, false, F::GraphHadamard);
    h16.constructible = true;
    h16.recipe = ConstructionRecipe{ConstructionKind::GraphHadamardMinus, 16};
    t.push_back(h16);
    auto h16b = row(16, 10, 1, false, F::GraphHadamard);
    h16b.constructible = true;
    h16b.recipe = ConstructionRecipe{ConstructionKind::GraphHadamardPlus, 16};
    t.push_back(h16b);

    t.push_back(paley(row(18, 9, 1, false, F::Conference)));
    t.push_back(not_built(row(26, 13, 4, false, F::Conference), "needs a conference matrix over GF(25) and further graphs"));
    t.push_back(not_built(row(28, 7, 1, false, F::GraphOnly), "graph construction not provided"));
    t.push_back(not_built(row(28, 21, 1, false, F::GraphOnly), "graph construction not provided"));
    t.push_back(paley(row(30, 15, 6, true, F::Conference)));

    auto t36 = row(36, 15, 227, true, F::GraphHadamard);
    t36.constructible = true;
    t36.catalog_ids = {"table2-1", "table2-2", "table2-3", "table2-4", "table2-5"};
    t36.note = "only the five printed representatives are embedded; the class count is not verified";
    t.push_back(t36);
    t.push_back(not_built(row(36, 21, 227, true, F::GraphHadamard),
                          "not registered as constructible; negate_signature of a (36,15) entry yields one"));

    t.push_back(paley(row(38, 19, 11, true, F::Conference)));
    t.push_back(paley(row(42, 21, 18, true, F::Conference)));
    t.push_back(not_built(row(46, 23, 80, true, F::Conference), "needs a conference matrix of order 46"));
    t.push_back(not_built(row(50, 25, 18, true, F::Conference), "needs a Paley conference matrix over GF(49)"));
    t.push_back(not_built(row(176, 22, 1, false, F::GraphOnly), "graph construction not provided"));
    t.push_back(not_built(row(176, 154, 1, false, F::GraphOnly), "graph construction not provided"));
    t.push_back(not_built(row(276, 23, 1, false, F::GraphOnly), "graph construction not provided"));
    t.push_back(not_built(row(276, 253, 1, false, F::GraphOnly), "graph construction not provided"));
    return t;
}

} // namespace

const std::vector<KnownFrameRecord>& known_frames()
{
    static const std::vector<KnownFrameRecord> table = make_table();
    return table;
}

std::optional<KnownFrameRecord> lookup_known_frame(int n, int k)
{
    for (const auto& r : known_frames())
        if (r.n == n && r.k == k)
            return r;
    if (n >= 2 && (k == 1 || k == n - 1)) {
        KnownFrameRecord r = row(n, k, 1, false, FrameFamily::Trivial);
        r.constructible = true;
        r.recipe = ConstructionRecipe{k == 1 ? ConstructionKind::TrivialDim1 : ConstructionKind::TrivialCodim1, n};
        return r;
    }
    return std::nullopt;
}

SignatureMatrix catalog_matrix(std::string_view id)
{
    const auto& texts = table2_texts();
    for (std::size_t i = 0; i < texts.size(); ++i)
        if (id == "table2-" + std::to_string(i + 1))
            return parse_signature_text(texts[i]);
    throw Error(Errc::InvalidParameters, "unknown catalog id " + std::string(id));
}

std::vector<SignatureMatrix> build_known_signatures(const KnownFrameRecord& record)
{
    std::vector<SignatureMatrix> out;
    if (!record.constructible)
        return out;
    if (record.recipe)
        out.push_back(build_signature(*record.recipe));
    for (const auto& id : record.catalog_ids)
        out.push_back(catalog_matrix(id));
    return out;
}

std::string sha256_hex(std::string_view bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error(Errc::InvalidInput, "SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

} // namespace sf
