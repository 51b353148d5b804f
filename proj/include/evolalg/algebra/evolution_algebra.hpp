#pragma once

#include <cstddef>
#include <vector>

#include "evolalg/graph/index_set.hpp"
#include "evolalg/linalg/matrix.hpp"

namespace evolalg::algebra {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Vector;

/// A finite-dimensional evolution algebra with a fixed natural basis e_0..e_{n-1}.
/// Column i of the structure matrix holds the coordinates of e_i^2, so entry
/// (k, i) is the coefficient of e_k in e_i^2.
class EvolutionAlgebra {
public:
    /// Throws DimensionError unless `structure` is square.
    explicit EvolutionAlgebra(Matrix structure);

    const Field& field() const noexcept { return structure_.field(); }
    std::size_t dim() const noexcept { return structure_.rows(); }
    const Matrix& structure() const noexcept { return structure_; }

    /// e_i^2; throws IndexError when i >= dim.
    Vector square_of_basis(std::size_t i) const;
    Vector basis_element(std::size_t i) const;

    /// ab = sum_i a_i b_i e_i^2.
    Vector multiply(const Vector& a, const Vector& b) const;

    bool operator==(const EvolutionAlgebra&) const = default;

private:
    void check_length(const Vector& v) const;

    Matrix structure_;
};

/// Indices i with e_i^2 e_i^2 != (e_i^2 e_i) e_i. An empty result is necessary
/// for power-associativity, not sufficient.
graph::IndexSet power_associativity_witnesses(const EvolutionAlgebra& a);

/// The algebra of a directed graph: e_i^2 is the sum of e_j over the edges i -> j.
/// adjacency[i][j] records the edge i -> j.
EvolutionAlgebra algebra_from_graph(const Field& field, const std::vector<std::vector<bool>>& adjacency);

}  // namespace evolalg::algebra
