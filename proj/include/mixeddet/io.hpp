#pragma once

// JSON encodings. Rationals are strings ("p/q" or "p"), complex entries are
// [re, im] string pairs, univariate polynomials are coefficient arrays low to
// high, multivariate polynomials are [exponent-vector, coefficient] pairs in
// graded-lex order.

#include <string>
#include <variant>

#include "json.hpp"

#include "mixeddet/matcore.hpp"
#include "mixeddet/multipoly.hpp"
#include "mixeddet/stability.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const HermitianMatrix& a);
Json to_json(const Pencil& p);
Json to_json(const UniPoly& p);
Json to_json(const MultiPoly& p);
Json to_json(const Inertia& i);
Json to_json(const StabilityVerdict& v);
/// 1-based element list.
Json to_json(IndexSet s);
Json to_json(const ExponentVector& alpha);
Json to_json(const std::vector<Rational>& v);

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
/// Rejects non-Hermitian input unless the document carries "symmetrize": true.
HermitianMatrix hermitian_from_json(const Json& j);
/// {"ell": k, "coeffs": [matrix, ...], "constant": matrix}
Pencil pencil_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
/// Accepts the pair list, or {"nvars": k, "terms": [...]}; the zero polynomial is written in the second form.
MultiPoly multipoly_from_json(const Json& j);
ExponentVector exponents_from_json(const Json& j);

using ParsedInput = std::variant<HermitianMatrix, Pencil, MultiPoly, UniPoly>;

/// Detects the document kind by shape.
ParsedInput parse_document(const Json& j);
/// Reads and parses a file; errors name the path and the offending entry.
ParsedInput parse_input(const std::string& path);
Json read_json_file(const std::string& path);

/// FNV-1a 64 of the compact serialization, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace mixeddet
