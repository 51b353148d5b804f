#include "evolalg/algebra/evolution_algebra.hpp"

#include "evolalg/error.hpp"

namespace evolalg::algebra {

EvolutionAlgebra::EvolutionAlgebra(Matrix structure) : structure_(std::move(structure)) {
    if (!structure_.is_square()) {
        throw DimensionError("structure matrix must be square, got " + std::to_string(structure_.rows()) + "x" +
                             std::to_string(structure_.cols()));
    }
}

void EvolutionAlgebra::check_length(const Vector& v) const {
    if (v.size() != dim()) {
        throw DimensionError("element has " + std::to_string(v.size()) + " coordinates, algebra has dimension " +
                             std::to_string(dim()));
    }
}

Vector EvolutionAlgebra::square_of_basis(std::size_t i) const {
    if (i >= dim()) throw IndexError("basis index " + std::to_string(i + 1) + " out of range");
    return structure_.column(i);
}

Vector EvolutionAlgebra::basis_element(std::size_t i) const {
    if (i >= dim()) throw IndexError("basis index " + std::to_string(i + 1) + " out of range");
    return linalg::unit_vector(field(), dim(), i);
}

Vector EvolutionAlgebra::multiply(const Vector& a, const Vector& b) const {
    check_length(a);
    check_length(b);
    Vector out = linalg::zero_vector(field(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        const Scalar c = a[i] * b[i];
        for (std::size_t k = 0; k < dim(); ++k) {
            const Scalar& w = structure_(k, i);
            if (!w.is_zero()) out[k] += c * w;
        }
    }
    return out;
}

graph::IndexSet power_associativity_witnesses(const EvolutionAlgebra& a) {
    graph::IndexSet out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Vector sq = a.square_of_basis(i);
        const Vector e = a.basis_element(i);
        if (a.multiply(sq, sq) != a.multiply(a.multiply(sq, e), e)) out.push_back(i);
    }
    return out;
}

EvolutionAlgebra algebra_from_graph(const Field& field, const std::vector<std::vector<bool>>& adjacency) {
    const std::size_t n = adjacency.size();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n) throw DimensionError("adjacency matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency[i][j]) m(j, i) = Scalar::one(field);
        }
    }
    return EvolutionAlgebra(std::move(m));
}

}  // namespace evolalg::algebra
