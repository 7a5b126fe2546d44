#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "hopf/sweedler.hpp"

namespace hopf {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json_text(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

Json field_to_json(const FieldSpec& f);
/// Accepts the flag grammar as a string or {"kind", "p", "vars"}.
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const FieldSpec& f, const Scalar& s);
Json vec_to_json(const FieldSpec& f, const Vec& v);
Vec vec_from_json(const FieldSpec& f, const Json& j, std::size_t n);
/// Dense rows of scalar strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows, std::size_t cols);

/// {"name", "field", "dim", "basis", "unit", "counit", "mult": [[i,j,k,c]],
/// "comult": [[i,j,k,c]], "antipode": [[i,j,c]], "presentation",
/// "group_likes"}. mult [i,j,k,c]: e_i e_j has c at e_k; comult [i,j,k,c]:
/// Delta(e_i) has c e_j (x) e_k; antipode [i,j,c]: S(e_i) has c at e_j.
/// Omitted entries are zero.
Json algebra_to_json(const HopfAlgebra& a);
HopfAlgebra algebra_from_json(const Json& j);

/// Same field, labels and structure constants; comultiplication terms are
/// compared after summing.
bool structure_identical(const HopfAlgebra& a, const HopfAlgebra& b);

/// Linear combination of basis labels, e.g. "y", "2*y + y^2", "(X1+1)*y".
Vec parse_element(const HopfAlgebra& a, std::string_view text);

Json report_to_json(const VerificationReport& r);
Json tristate_to_json(const FieldSpec& f, const TriState& t);
Json aut_to_json(const FieldSpec& f, const AutDescription& d);
Json classification_to_json(const HopfAlgebra& a, const ClassificationReport& r);
Json certificate_to_json(const H4Certificate& c);

using AlgebraResolver = std::function<AlgebraPtr(const std::string& ref)>;

/// {"A": ref, "H": ref, "action": [[i,j,k,c]] | "trivial",
///  "cocycle": [[i,j,k,c]] | "trivial"}. action [i,j,k,c]: e_i |> e_j has
/// c at e_k; cocycle [i,j,k,c]: f(e_i, e_j) has c at e_k.
CrossedSystem crossed_from_json(const Json& j, const AlgebraResolver& resolve);
Json crossed_to_json(const CrossedSystem& s, const std::string& a_ref, const std::string& h_ref);

}  // namespace hopf
