#include "evolalg/cli/report.hpp"

#include <algorithm>

#include "evolalg/decompose/decompose.hpp"
#include "evolalg/graph/associated_graph.hpp"
#include "evolalg/ideals/ideals.hpp"

namespace evolalg::cli {

namespace {

using graph::IndexSet;

Json indices(const IndexSet& s) {
    Json out = Json::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

Json index_sets(const std::vector<IndexSet>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(indices(s));
    return out;
}

Json vector_json(std::span<const linalg::Scalar> v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

Json matrix_rows(const linalg::Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

// Annihilator and radical are spanned by basis elements; report which ones.
Json coordinate_indices(const linalg::Subspace& s) { return indices(IndexSet(s.pivots().begin(), s.pivots().end())); }

Json header(const algebra::EvolutionAlgebra& a) {
    Json out;
    out["field"] = a.field().name();
    out["dim"] = a.dim();
    return out;
}

Json reasons_json(const decompose::SimplicityVerdict& v) {
    Json out = Json::array();
    for (const auto& r : v.reasons) {
        Json entry;
        entry["code"] = decompose::reason_code(r);
        entry["index"] = r.index ? Json(*r.index + 1) : Json(nullptr);
        entry["text"] = decompose::reason_text(r);
        out.push_back(std::move(entry));
    }
    return out;
}

Json parts_json(const decompose::CanonicalDecomposition& c) {
    Json out = Json::array();
    for (const auto& p : c.parts) {
        Json entry;
        entry["kind"] = p.kind == decompose::PartKind::PrincipalCycle ? "principal_cycle" : "chain_start";
        entry["seed"] = indices(p.seed);
        entry["derived"] = indices(p.derived);
        out.push_back(std::move(entry));
    }
    return out;
}

Json blocks_json(const decompose::DecompositionReport& d) {
    Json out = Json::array();
    for (const auto& b : d.blocks) {
        Json entry;
        entry["indices"] = indices(b.indices);
        entry["nondegenerate"] = b.nondegenerate;
        entry["simple"] = b.simple;
        entry["det"] = b.det.to_string();
        out.push_back(std::move(entry));
    }
    return out;
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

Json analyze_report(const algebra::EvolutionAlgebra& a) {
    const graph::AssociatedGraph g(a);
    const auto decomposition = decompose::optimal_decomposition(a);
    const auto simple = decompose::is_simple(a);
    const auto irreducible = decompose::is_irreducible(a);

    Json out = header(a);
    out["annihilator_basis"] = coordinate_indices(ideals::annihilator(a).carrier());
    out["radical_basis"] = coordinate_indices(ideals::radical(a).carrier());
    out["nondegenerate"] = decomposition.algebra_nondegenerate;
    out["chain_start_indices"] = indices(g.chain_start_indices());
    out["principal_cycles"] = index_sets(g.principal_cycles());
    out["canonical_parts"] = parts_json(decomposition.canonical);
    out["fragmentation_blocks"] = index_sets(decomposition.fragmentation.blocks);
    out["blocks"] = blocks_json(decomposition);
    out["simple"] = simple.simple;
    out["simple_reasons"] = reasons_json(simple);
    out["irreducible"] = irreducible.irreducible;
    out["irreducible_conclusive"] = irreducible.conclusive;
    out["optimal_certified"] = decomposition.optimal_certified;
    return out;
}

Json decompose_report(const algebra::EvolutionAlgebra& a) {
    const auto decomposition = decompose::optimal_decomposition(a);
    Json out = header(a);
    out["nondegenerate"] = decomposition.algebra_nondegenerate;
    out["canonical_parts"] = parts_json(decomposition.canonical);
    out["fragmentation_blocks"] = index_sets(decomposition.fragmentation.blocks);
    out["blocks"] = blocks_json(decomposition);
    out["optimal_certified"] = decomposition.optimal_certified;
    if (decomposition.algebra_nondegenerate) {
        const auto sum = decompose::simple_sum_report(a);
        out["simple_summands"] = sum ? index_sets(*sum) : Json(nullptr);
    } else {
        out["simple_summands"] = nullptr;
    }
    return out;
}

Json simple_report(const algebra::EvolutionAlgebra& a) {
    const auto simple = decompose::is_simple(a);
    const auto irreducible = decompose::is_irreducible(a);
    Json out = header(a);
    out["simple"] = simple.simple;
    out["simple_reasons"] = reasons_json(simple);
    out["det"] = linalg::det(a.structure()).to_string();
    out["irreducible"] = irreducible.irreducible;
    out["irreducible_conclusive"] = irreducible.conclusive;
    return out;
}

Json radical_report(const algebra::EvolutionAlgebra& a) {
    Json out = header(a);
    out["annihilator_basis"] = coordinate_indices(ideals::annihilator(a).carrier());
    out["radical_basis"] = coordinate_indices(ideals::radical(a).carrier());
    out["nondegenerate"] = ideals::is_nondegenerate(a);
    return out;
}

Json ideal_report(const algebra::EvolutionAlgebra& a, const linalg::Vector& x) {
    const auto ideal = ideals::ideal_generated_by(a, x);
    Json out = header(a);
    out["generator"] = vector_json(x);
    out["lambda"] = indices(ideals::lambda_x(a, x));
    out["ideal_dim"] = ideal.dim();
    out["ideal_basis"] = matrix_rows(ideal.carrier().basis());
    return out;
}

Json graph_report(const algebra::EvolutionAlgebra& a) {
    const graph::AssociatedGraph g(a);
    Json out = header(a);
    Json edges = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (auto j : g.successors(i)) edges.push_back(Json::array({i + 1, j + 1}));
    }
    IndexSet cyclic;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.is_cyclic_index(i)) cyclic.push_back(i);
    }
    out["edges"] = std::move(edges);
    out["sinks"] = indices(g.sinks());
    out["chain_start_indices"] = indices(g.chain_start_indices());
    out["cyclic_indices"] = indices(cyclic);
    out["principal_cycles"] = index_sets(g.principal_cycles());
    out["weak_components"] = index_sets(g.weak_components());
    return out;
}

Json quotient_report(const algebra::EvolutionAlgebra& a, const ideals::QuotientPresentation& q) {
    Json out = header(a);
    out["ideal_dim"] = a.dim() - q.chosen.size();
    out["chosen"] = indices(q.chosen);
    out["quotient_dim"] = q.quotient.dim();
    out["quotient_structure"] = matrix_rows(q.quotient.structure());
    out["projection"] = matrix_rows(q.projection);
    return out;
}

Json oracle_report(const algebra::EvolutionAlgebra& a, const oracle::EnumerationBudget& budget) {
    const auto all_ideals = oracle::enumerate_ideals(a, budget);
    const auto rad = oracle::radical_oracle(a, budget);
    const bool simple = oracle::simple_oracle(a, budget);
    const auto classical = oracle::classical_checks(a, budget);

    const bool radical_matches = rad == ideals::radical(a).carrier();
    const bool simple_matches = simple == decompose::is_simple(a).simple;

    Json out = header(a);
    out["budget"] = budget.max_vectors;
    out["ideal_count"] = all_ideals.size();
    out["radical_basis"] = matrix_rows(rad.basis());
    out["radical_matches"] = radical_matches;
    out["simple"] = simple;
    out["simple_matches"] = simple_matches;
    out["semiprime"] = classical.semiprime;
    out["classically_nondegenerate"] = classical.classically_nondegenerate;
    out["consistent"] = radical_matches && simple_matches;
    return out;
}

std::string render_table(const Json& report) {
    std::size_t width = 0;
    for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
    std::string out;
    for (const auto& [key, value] : report.items()) {
        out += key + std::string(width - key.size() + 2, ' ');
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            out += '\n';
            for (const auto& row : value) {
                out += "  -";
                for (const auto& [k, v] : row.items()) out += " " + k + "=" + cell(v);
                out += '\n';
            }
        } else {
            out += cell(value) + '\n';
        }
    }
    return out;
}

}  // namespace evolalg::cli
