#include "evolalg/ideals/quotient.hpp"

#include "evolalg/error.hpp"

namespace evolalg::ideals {

QuotientPresentation quotient(const EvolutionAlgebra& a, const Ideal& ideal) {
    const auto& field = a.field();
    const std::size_t n = a.dim();
    const Subspace& carrier = ideal.carrier();
    if (carrier.ambient_dim() != n) throw DimensionError("ideal does not live in the algebra");

    graph::IndexSet chosen;
    std::vector<Vector> columns = carrier.basis_vectors();
    Subspace covered = carrier;
    for (std::size_t i = 0; i < n && covered.dim() < n; ++i) {
        Vector e = a.basis_element(i);
        if (covered.contains(e)) continue;
        chosen.push_back(i);
        columns.push_back(e);
        covered = Subspace::from_vectors(field, n, columns);
    }
    const std::size_t d = carrier.dim();
    const std::size_t q = chosen.size();
    if (d + q != n) throw InternalError("quotient basis does not complete the ideal");

    // Coordinates relative to [ideal basis | chosen e_i]; the last q give the image in A/I.
    const linalg::Matrix change = linalg::Matrix::from_rows(field, n, columns).transpose();
    const linalg::Matrix inv = linalg::inverse(change);
    linalg::Matrix projection(field, q, n);
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < n; ++c) projection(r, c) = inv(d + r, c);
    }

    linalg::Matrix structure(field, q, q);
    for (std::size_t t = 0; t < q; ++t) {
        const Vector image = projection.apply(a.square_of_basis(chosen[t]));
        for (std::size_t r = 0; r < q; ++r) structure(r, t) = image[r];
    }
    return QuotientPresentation{std::move(chosen), EvolutionAlgebra(std::move(structure)), std::move(projection)};
}

}  // namespace evolalg::ideals
