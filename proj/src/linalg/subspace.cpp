#include "evolalg/linalg/subspace.hpp"

#include "evolalg/error.hpp"

namespace evolalg::linalg {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
    if (a.field() != b.field()) throw FieldError("subspaces live over different fields");
}

}  // namespace

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
    return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
    return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::from_vectors(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
    RrefResult red = rref(Matrix::from_rows(field, ambient_dim, vectors));
    return Subspace(std::move(red.reduced), std::move(red.pivots));
}

Subspace Subspace::coordinate(const Field& field, std::size_t ambient_dim, std::span<const std::size_t> indices) {
    std::vector<Vector> vs;
    vs.reserve(indices.size());
    for (auto i : indices) vs.push_back(unit_vector(field, ambient_dim, i));
    return from_vectors(field, ambient_dim, vs);
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector length does not match the ambient dimension");
    // Eliminate against the echelon basis: v is in the span iff nothing survives.
    Vector rest(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar c = rest[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t k = pivots_[r]; k < ambient_dim(); ++k) rest[k] -= c * basis_(r, k);
    }
    return linalg::is_zero(rest);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    require_same_ambient(*this, other);
    for (std::size_t r = 0; r < dim(); ++r) {
        if (!other.contains(basis_.row(r))) return false;
    }
    return true;
}

bool Subspace::is_coordinate() const {
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < ambient_dim(); ++c) {
            if (c != pivots_[r] && !basis_(r, c).is_zero()) return false;
        }
    }
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    std::vector<Vector> vs = a.basis_vectors();
    for (auto& v : b.basis_vectors()) vs.push_back(std::move(v));
    return Subspace::from_vectors(a.field(), a.ambient_dim(), vs);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const Field& field = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(field, n);
    // x = sum s_r a_r = sum t_q b_q  <=>  (s, -t) lies in the kernel of [A^T | B^T].
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix stacked(field, n, da + db);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < da; ++r) stacked(c, r) = a.basis()(r, c);
        for (std::size_t q = 0; q < db; ++q) stacked(c, da + q) = b.basis()(q, c);
    }
    const Matrix kernel = nullspace(stacked);
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
        Vector x = zero_vector(field, n);
        for (std::size_t r = 0; r < da; ++r) {
            const Scalar& s = kernel(k, r);
            if (s.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) x[c] += s * a.basis()(r, c);
        }
        vs.push_back(std::move(x));
    }
    return Subspace::from_vectors(field, n, vs);
}

}  // namespace evolalg::linalg
