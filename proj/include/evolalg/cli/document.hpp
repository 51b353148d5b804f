#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evolalg/algebra/evolution_algebra.hpp"

namespace evolalg::cli {

using algebra::EvolutionAlgebra;

/// Parses an algebra document (see docs/FORMAT.md). When `field_override` is
/// set it replaces the field named in the document. Throws ParseError for
/// malformed text and ValidationError for well-formed but invalid content.
EvolutionAlgebra parse_document(std::string_view text, std::optional<linalg::Field> field_override = std::nullopt);

/// Canonical text of an algebra; parse_document(emit_document(a)) == a.
std::string emit_document(const EvolutionAlgebra& a);

/// One vector per non-blank, non-comment line, whitespace separated.
std::vector<linalg::Vector> parse_vector_list(std::string_view text, const linalg::Field& field, std::size_t dim);

/// Comma separated coordinates, e.g. "1,0,-1/2".
linalg::Vector parse_vector_arg(std::string_view text, const linalg::Field& field, std::size_t dim);

}  // namespace evolalg::cli
