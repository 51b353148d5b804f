#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evolalg/linalg/matrix.hpp"

namespace evolalg::linalg {

/// A linear subspace of K^n stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are equal entry by entry.
class Subspace {
public:
    static Subspace zero(const Field& field, std::size_t ambient_dim);
    static Subspace full(const Field& field, std::size_t ambient_dim);
    /// Span of the given vectors. Throws DimensionError on a length mismatch.
    static Subspace from_vectors(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors);
    /// Span of the standard basis vectors e_i, i in `indices` (0-based).
    static Subspace coordinate(const Field& field, std::size_t ambient_dim, std::span<const std::size_t> indices);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    /// Canonical basis, one vector per row.
    const Matrix& basis() const noexcept { return basis_; }
    std::vector<Vector> basis_vectors() const;
    /// Pivot column of each basis row.
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool is_subspace_of(const Subspace& other) const;

    /// True when the canonical basis consists of standard basis vectors.
    bool is_coordinate() const;

    bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

}  // namespace evolalg::linalg
