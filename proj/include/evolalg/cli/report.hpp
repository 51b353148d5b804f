#pragma once

#include <string>

#include <json.hpp>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/ideals/quotient.hpp"
#include "evolalg/oracle/oracle.hpp"

namespace evolalg::cli {

using Json = nlohmann::ordered_json;

/// Reports use 1-based indices and scalars as canonical strings. Key order is
/// fixed; docs/report.schema.json describes the analyze report.
Json analyze_report(const algebra::EvolutionAlgebra& a);
Json decompose_report(const algebra::EvolutionAlgebra& a);
Json simple_report(const algebra::EvolutionAlgebra& a);
Json radical_report(const algebra::EvolutionAlgebra& a);
Json ideal_report(const algebra::EvolutionAlgebra& a, const linalg::Vector& x);
Json graph_report(const algebra::EvolutionAlgebra& a);
Json quotient_report(const algebra::EvolutionAlgebra& a, const ideals::QuotientPresentation& q);
/// Adds "consistent": false when a brute-force result disagrees with the library.
Json oracle_report(const algebra::EvolutionAlgebra& a, const oracle::EnumerationBudget& budget);

/// Two-column text rendering of a report for terminals.
std::string render_table(const Json& report);

}  // namespace evolalg::cli
