#pragma once

#include <cstddef>
#include <vector>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/linalg/subspace.hpp"

namespace evolalg::oracle {

using algebra::EvolutionAlgebra;
using linalg::Subspace;

/// Brute-force checks over small prime fields. Every entry point throws
/// ValidationError for rational algebras and BudgetExceeded when the
/// instance is larger than the budget.
struct EnumerationBudget {
    /// Cap on p^n, the number of vectors in the space.
    std::size_t max_vectors = 4096;
    /// Cap on the number of subspaces of the space.
    std::size_t max_subspaces = 500000;
};

/// Every vector of F_p^n, in lexicographic order of coordinates.
std::vector<linalg::Vector> enumerate_vectors(const linalg::Field& field, std::size_t n, const EnumerationBudget& budget);

/// Every subspace of F_p^n, generated from the reduced echelon patterns.
std::vector<Subspace> enumerate_subspaces(const linalg::Field& field, std::size_t n, const EnumerationBudget& budget);

/// Every ideal of the algebra.
std::vector<Subspace> enumerate_ideals(const EvolutionAlgebra& a, const EnumerationBudget& budget);

/// xA in I implies x in I, tested on every vector x.
bool absorption_oracle(const EvolutionAlgebra& a, const Subspace& ideal, const EnumerationBudget& budget);

/// Intersection of all ideals with the absorption property.
Subspace radical_oracle(const EvolutionAlgebra& a, const EnumerationBudget& budget);

/// A^2 != 0 and the only ideals are 0 and A.
bool simple_oracle(const EvolutionAlgebra& a, const EnumerationBudget& budget);

struct ClassicalVerdict {
    /// No nonzero ideal I with I^2 = 0.
    bool semiprime;
    /// a(Aa) = 0 forces a = 0.
    bool classically_nondegenerate;
};

ClassicalVerdict classical_checks(const EvolutionAlgebra& a, const EnumerationBudget& budget);

}  // namespace evolalg::oracle
