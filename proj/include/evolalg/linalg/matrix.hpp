#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "evolalg/linalg/scalar.hpp"

namespace evolalg::linalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
/// The i-th standard basis vector (0-based).
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
/// Integer coordinates, convenient in tests and examples.
Vector make_vector(const Field& field, std::initializer_list<long> values);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    /// Throws DimensionError if the rows have different lengths.
    static Matrix from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows);
    static Matrix from_integers(const Field& field, std::initializer_list<std::initializer_list<long>> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector apply(std::span<const Scalar> v) const;

    bool operator==(const Matrix& other) const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    std::size_t rank;
    /// Reduced row-echelon form with the zero rows dropped (rank x cols).
    Matrix reduced;
    /// Pivot column of each nonzero row, ascending.
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact determinant by Gaussian elimination. Throws DimensionError for non-square input.
Scalar det(const Matrix& m);

/// Basis of { x : m x = 0 }, one vector per row of the result.
Matrix nullspace(const Matrix& m);

/// Inverse of a square matrix; throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

}  // namespace evolalg::linalg
