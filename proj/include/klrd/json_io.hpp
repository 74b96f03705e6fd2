#pragma once

#include "klrd/gdim.hpp"
#include "klrd/hecke.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace klrd {

/// Ordered maps keep field order stable, so fixtures diff cleanly.
using Json = nlohmann::ordered_json;

/// Schema violation. `pointer` locates the offending node ("/blocks/2/dim");
/// what() carries pointer and message together.
struct JsonError : std::runtime_error {
    std::string pointer;

    JsonError(const std::string& ptr, const std::string& msg)
        : std::runtime_error((ptr.empty() ? std::string("/") : ptr) + ": " + msg), pointer(ptr) {}
};

// Vertices print as "+p^1"; scalars and matrix entries as exact strings.

Json dimvec_to_json(const DimVec& nu);
DimVec dimvec_from_json(const Json& j, const std::string& ptr);

/// Sequences serialize as the full label list (i_{1-m}, ..., i_m); parsing
/// checks the mirror condition i_{1-l} = theta(i_l).
Json seq_to_json(const ThetaSeq& s);
ThetaSeq seq_from_json(const Json& j, const std::string& ptr);

Json matrix_to_json(const Matrix& A);
Matrix matrix_from_json(const Json& j, const std::string& ptr);

/// Module layout:
/// {"nu": {label: count}, "blocks": [{"seq": [...], "dim": d}],
///  "kappa": [{"l": l, "seq": [...], "rows": [[...]]}],
///  "sigma": [{"k": k, "seq": [...], "rows": [[...]]}], "parts": [a, b]}
/// kappa/sigma entries omitted when zero; "parts" only at rank zero.
Json module_to_json(const FDModule& M);
FDModule module_from_json(const Json& j);

/// {"m": m, "blocks": [...], "X": [matrices], "T": [matrices]}
Json hecke_to_json(const HeckeModule& H);

Json pbw_to_json(const PbwForm& form, Flavor f, WordStyle style);

/// Expression file for the pbw command:
/// {"nu": {...}, "type": "D"|"B", "product": [item...]} with items
/// {"idem": [seq]}, {"kappa": l}, {"sigma": k}, {"pi": 1}, {"scalar": "p^2"}.
/// An empty product denotes the identity (sum of all idempotents).
KlrOp op_from_expr_json(const Json& j);

/// Comma-separated labels, e.g. "+p^1,+p^-1,+p^3,+p^-3"; the multiset must
/// be theta-symmetric. Used by the --nu flags.
DimVec dimvec_from_labels(const std::string& csv);
/// Comma-separated full sequence, e.g. "+p^-1,+p^1"; mirror-checked.
ThetaSeq seq_from_labels(const std::string& csv);

}  // namespace klrd
