#pragma once

#include "seidelframes/frames.hpp"

#include <string_view>

namespace sf {

enum class ConstructionKind {
    TrivialDim1,
    TrivialCodim1,
    PaleyConference,
    GraphHadamardPlus,
    GraphHadamardMinus,
    BasisRepetition,
};

std::string_view to_string(ConstructionKind kind) noexcept;

/// `size` means: n for the trivial kinds, the prime p for Paley, the order 4^m
/// for the Hadamard kinds and k for basis repetition.
struct ConstructionRecipe {
    ConstructionKind kind = ConstructionKind::TrivialDim1;
    int size = 0;

    friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

/// J - I (k = 1) or, with codim1, I - J (k = n - 1).
SignatureMatrix trivial_signature(int n, bool codim1);

/// Symmetric conference matrix of order p + 1 from the quadratic character of
/// GF(p), bordered by a +1 row and column for the point at infinity (last index).
SignatureMatrix paley_conference(int p);

/// m-fold Kronecker power of the fixed order-4 graph Hadamard.
IntMatrix graph_hadamard(int order);

/// True iff h is symmetric, +-1 valued, unit diagonal and h^2 = order * I.
bool is_graph_hadamard(const IntMatrix& h);

/// Q = H - I (plus, mu = -2) or Q = I - H (mu = 2).
SignatureMatrix hadamard_signature(const IntMatrix& h, bool plus);

/// Orthonormal basis of R^k repeated twice and scaled by 1/sqrt(2); rows i and
/// i + k carry the same vector.
AnalysisOperator basis_repetition(int k);

/// Signature for every kind except BasisRepetition (which has none).
SignatureMatrix build_signature(const ConstructionRecipe& recipe);

/// Frame for any kind.
AnalysisOperator build_frame(const ConstructionRecipe& recipe);

bool is_prime(int p);

} // namespace sf
